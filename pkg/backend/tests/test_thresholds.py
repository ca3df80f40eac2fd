from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from limits import SolverLimits
from designs import scale
from errors import InvalidArgumentError
from hypergraph import random_hypergraph
from utils.thresholds import (
    admissible_threshold,
    check_report,
    degree_ratio_holds,
    family_hypothesis,
    is_admissible,
    nice_tree_hypothesis,
    nice_tree_order_bound,
    threshold_dominates,
    threshold_identity_holds,
    tour_hypotheses,
)


@pytest.mark.parametrize('c, k, mu, expected', [
    (3, 3, 1, 7),
    (3, 3, 5, 7),
    (3, 4, 1, 10),
    (3, 5, 1, 12),
    (3, 6, 1, 28),
    (4, 4, 1, 7),
    (4, 6, 1, 16),
    (4, 7, 1, Fraction(47, 2)),
    (3, 7, 1, 34),
])
def test_admissible_threshold(c, k, mu, expected):
    assert admissible_threshold(c, k, mu) == expected


def test_threshold_grows_with_multiplicity_only_for_large_rank():
    assert admissible_threshold(4, 6, 3) == admissible_threshold(4, 6, 1)
    assert admissible_threshold(3, 7, 2) > admissible_threshold(3, 7, 1)


@pytest.mark.parametrize('c, k, mu', [(2, 3, 1), (3, 2, 1), (3, 3, 0)])
def test_threshold_rejects_uncovered_parameters(c, k, mu):
    with pytest.raises(InvalidArgumentError) as info:
        admissible_threshold(c, k, mu)
    assert info.value.code == 'UNCOVERED_PARAMETERS'


def test_threshold_identity_on_grid():
    for c in range(3, 15):
        for k in range(c, 2 * c + 1):
            if (c >= 4 and k <= 2 * c - 2) or k >= 2 * c - 1:
                assert threshold_identity_holds(c, k), (c, k)


def test_threshold_domination_on_grid():
    for c in range(3, 10):
        for k in range(2 * c + 1, 2 * c + 12):
            for mu in (1, 2, 5):
                assert threshold_dominates(c, k, mu), (c, k, mu)


def test_identity_outside_its_cases_raises():
    with pytest.raises(InvalidArgumentError):
        threshold_identity_holds(3, 3)


def test_nice_tree_order_bound():
    assert nice_tree_order_bound(3, 3, 1) == 0
    assert nice_tree_order_bound(3, 7, 1) == 6 * (8 - 8 + 1)
    assert nice_tree_order_bound(3, 8, 2) == 2 * 7 * (16 - 8 + 1)


RATIO_LIMITS = SolverLimits(degree_max_t=5)


@settings(max_examples=1000, deadline=None)
@given(st.integers(2, 10), st.integers(1, 8), st.integers(0, 2 ** 31))
def test_degree_ratio_on_random_hypergraphs(n, m, seed):
    hypergraph = random_hypergraph(n, m, (2, 5), seed)
    k = hypergraph.rank
    for j in range(0, k + 1):
        for i in range(0, j + 1):
            try:
                assert degree_ratio_holds(hypergraph, i, j, RATIO_LIMITS), (i, j)
            except InvalidArgumentError as e:
                assert e.code == 'RATIO_UNDEFINED'


class TestHypotheses:
    def test_fano3(self, fano3):
        report = tour_hypotheses(fano3)
        assert report['threshold'] == '7'
        assert report['admissible']
        assert report['delta2'] == 3
        assert report['conditions'] == {'i': True, 'ii': False, 'iii': False}
        assert report['applies'] == ['i']
        assert report['spanningTourGuaranteed']

    def test_plain_fano_is_not_covered(self, fano):
        report = tour_hypotheses(fano)
        assert report['admissible']
        assert report['applies'] == []

    def test_sqs8_is_outside_the_degree_conditions(self, sqs8):
        report = tour_hypotheses(sqs8)
        assert report['delta2'] == 3
        assert report['applies'] == []

    def test_four_fold_sqs8(self, sqs8):
        report = tour_hypotheses(scale(sqs8, 4))
        assert report['delta2'] == 12
        assert 'i' in report['applies']

    def test_pbd(self, pbd13):
        assert is_admissible(pbd13)
        assert 'i' in tour_hypotheses(pbd13)['applies']

    def test_family_hypothesis(self, fano, single_edge):
        assert family_hypothesis(fano) == {'required': 2, 'flagConnected': True, 'familyGuaranteed': True}
        assert not family_hypothesis(single_edge)['familyGuaranteed']

    def test_nice_tree_hypothesis(self, fano3, fano):
        assert nice_tree_hypothesis(fano3)['niceTreeGuaranteed']
        assert not nice_tree_hypothesis(fano)['niceTreeGuaranteed']

    def test_check_report(self, fano3):
        report = check_report(fano3)
        assert report['profile']['minDegrees'] == {'1': 9, '2': 3, '3': 0}
        assert report['strongCutEdges'] == []
        assert report['flagSpanningTourExists'] is False
