import pytest
from hypothesis import given, settings

from designs import gen_boolean_sqs, gen_sts, scale
from errors import InvalidArgumentError, ParseError
from euler_tours import (
    ClosedWalk,
    EulerFamily,
    emit_ucycle,
    euler_family,
    euler_tour,
    extract_family,
    line_graph_hamiltonian_cycle,
    parse_walks,
    run_spanning_pipeline,
    spanning_euler_tour,
    verify,
)
from hypergraph import Hypergraph, incidence, strong_cut_edges
from oracle import oracle_euler
from parity_factor import find_barrier_brute_force
from strategies import hypergraphs
from utils.formatters import format_ucycle, format_walks


def _assert_spanning_tour(hypergraph, walk):
    report = verify(hypergraph, EulerFamily((walk,)), require_spanning=True, require_tour=True)
    assert report.ok, report.violations
    assert report.is_spanning
    assert walk.length == hypergraph.m
    assert set(walk.vertices) == set(range(hypergraph.n))


class TestFamily:
    def test_two_edges(self, two_edges):
        family = euler_family(two_edges)
        assert format_walks(family.walks) == '0 0 1 1\n'

    def test_extract_from_subgraph(self, two_edges):
        graph = incidence(two_edges)
        family = extract_family(two_edges, graph)
        assert family.walks == (ClosedWalk((0, 1), (0, 1)),)

    def test_two_components(self):
        hypergraph = Hypergraph(4, ((0, 1), (0, 1), (2, 3), (2, 3)))
        family = euler_family(hypergraph)
        assert format_walks(family.walks) == '0 0 1 1\n2 2 3 3\n'

    def test_empty(self):
        family = extract_family(Hypergraph(0), incidence(Hypergraph(0)))
        assert family.walks == ()

    def test_extract_rejects_bad_subgraph(self, fano):
        with pytest.raises(InvalidArgumentError) as info:
            extract_family(fano, incidence(fano).with_edges(()))
        assert info.value.code == 'BAD_FACTOR'

    def test_single_edge_has_none(self, single_edge):
        assert euler_family(single_edge) is None

    @pytest.mark.parametrize('order', [7, 9])
    def test_steiner_triple_systems(self, order):
        hypergraph = gen_sts(order)
        family = euler_family(hypergraph)
        assert family is not None
        assert verify(hypergraph, family).ok


class TestSpanning:
    def test_fano(self, fano):
        walk = spanning_euler_tour(fano)
        _assert_spanning_tour(fano, walk)

    def test_fano3(self, fano3):
        walk = spanning_euler_tour(fano3)
        _assert_spanning_tour(fano3, walk)
        assert walk.length == 21

    def test_sqs8(self, sqs8):
        walk = spanning_euler_tour(sqs8)
        _assert_spanning_tour(sqs8, walk)
        assert walk.length == 14

    def test_three_fold_sts9(self):
        hypergraph = scale(gen_sts(9), 3)
        _assert_spanning_tour(hypergraph, spanning_euler_tour(hypergraph))

    def test_four_fold_sqs8(self, sqs8):
        hypergraph = scale(sqs8, 4)
        _assert_spanning_tour(hypergraph, spanning_euler_tour(hypergraph))

    def test_pairwise_balanced_design(self, pbd13):
        walk = spanning_euler_tour(pbd13)
        _assert_spanning_tour(pbd13, walk)
        assert walk.length == 78

    def test_failure_names_the_stage(self, single_edge):
        outcome = run_spanning_pipeline(single_edge)
        assert outcome.walk is None
        assert outcome.stage == 'nice-tree'
        assert not outcome.capped

    def test_disconnected_input_fails_at_the_tree(self):
        outcome = run_spanning_pipeline(Hypergraph(4, ((0, 1), (0, 1), (2, 3), (2, 3))))
        assert outcome.to_dict()['found'] is False
        assert outcome.stage == 'nice-tree'


class TestTour:
    def test_skips_isolated_vertices(self):
        hypergraph = Hypergraph(3, ((0, 2), (0, 2)))
        walk = euler_tour(hypergraph)
        assert walk == ClosedWalk((0, 2), (0, 1))

    def test_no_edges(self):
        assert euler_tour(Hypergraph(3)) is None

    def test_two_components_have_no_tour(self):
        assert euler_tour(Hypergraph(4, ((0, 1), (0, 1), (2, 3), (2, 3)))) is None


class TestVerify:
    def test_repeated_vertex(self, two_edges):
        report = verify(two_edges, parse_walks('0 0 0 1\n'))
        assert not report.ok
        assert any('v_1 = v_2' in violation for violation in report.violations)

    def test_missing_edge(self, fano):
        walk = spanning_euler_tour(fano)
        shortened = ClosedWalk(walk.vertices[:-1], walk.edges[:-1])
        report = verify(fano, EulerFamily((shortened,)))
        assert any('never traversed' in violation for violation in report.violations)

    def test_requirements(self):
        hypergraph = Hypergraph(3, ((0, 1), (0, 1)))
        family = parse_walks('0 0 1 1\n')
        assert verify(hypergraph, family, require_tour=True).ok
        report = verify(hypergraph, family, require_spanning=True)
        assert report.is_tour and not report.is_spanning
        assert report.violations == ['vertices never visited: [2]']

    def test_report_dict(self, sqs8):
        report = verify(sqs8, EulerFamily((spanning_euler_tour(sqs8),)), provenance='pipeline')
        assert report.to_dict() == {
            'walkCount': 1,
            'edgeCount': 14,
            'isTour': True,
            'isSpanning': True,
            'violations': [],
            'provenance': 'pipeline',
        }

    def test_parse_rejects_edge_marker_on_vertex(self):
        with pytest.raises(ParseError) as info:
            parse_walks('e0 0 1 e1\n')
        assert info.value.code == 'MALFORMED_WALK'

    def test_edge_indices_are_bare_integers(self):
        assert format_walks([ClosedWalk((0, 1), (3, 5))]) == '0 3 1 5\n'
        assert parse_walks('0 e0 1 e1\n') == parse_walks('0 0 1 1\n')


class TestOutputs:
    def test_line_graph_cycle(self, sqs8):
        walk = spanning_euler_tour(sqs8)
        cycle = line_graph_hamiltonian_cycle(sqs8, walk)
        assert sorted(cycle) == list(range(14))
        for i, e in enumerate(cycle):
            assert sqs8.edge_sets[e] & sqs8.edge_sets[cycle[(i + 1) % 14]]

    def test_fano_cycle(self, fano):
        cycle = line_graph_hamiltonian_cycle(fano, spanning_euler_tour(fano))
        assert sorted(cycle) == list(range(7))

    def test_line_graph_needs_three_edges(self, two_edges):
        with pytest.raises(InvalidArgumentError) as info:
            line_graph_hamiltonian_cycle(two_edges, ClosedWalk((0, 1), (0, 1)))
        assert info.value.code == 'TOO_FEW_EDGES'

    def test_line_graph_rejects_invalid_tour(self, fano):
        with pytest.raises(InvalidArgumentError) as info:
            line_graph_hamiltonian_cycle(fano, ClosedWalk((0, 1), (0, 1)))
        assert info.value.code == 'INVALID_TOUR'

    def test_ucycle(self):
        junctions = emit_ucycle(ClosedWalk((0, 1), (0, 1)))
        assert format_ucycle(junctions) == '1:0,1 0:1,0\n'

    def test_ucycle_length(self, sqs8):
        assert len(emit_ucycle(spanning_euler_tour(sqs8))) == 14


@settings(max_examples=300, deadline=None)
@given(hypergraphs(max_n=5, max_m=5, min_size=2, max_size=4))
def test_family_matches_oracle(hypergraph):
    family = euler_family(hypergraph)
    assert (family is not None) == oracle_euler(hypergraph, 'family').family_exists


@settings(max_examples=200, deadline=None)
@given(hypergraphs(max_n=5, max_m=5, min_size=2, max_size=4))
def test_spanning_tour_is_confirmed_by_oracle(hypergraph):
    walk = spanning_euler_tour(hypergraph)
    if walk is not None:
        _assert_spanning_tour(hypergraph, walk)
        assert oracle_euler(hypergraph, 'spanningTour').spanning_tour_exists


@settings(max_examples=300, deadline=None)
@given(hypergraphs(max_n=5, max_m=4, min_size=1, max_size=4))
def test_strong_cut_edge_blocks_families(hypergraph):
    if strong_cut_edges(hypergraph):
        assert euler_family(hypergraph) is None
        assert find_barrier_brute_force(incidence(hypergraph)) is not None


def test_family_of_four_fold_sqs16():
    hypergraph = scale(gen_boolean_sqs(4), 4)
    family = euler_family(hypergraph)
    assert family is not None
    assert verify(hypergraph, family).ok
    assert family.edge_count == 560
