import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from designs import gen_sqs8, gen_sts, scale
from hypergraph import Hypergraph, parse

DATA_DIR = os.path.join(os.path.dirname(os.path.abspath(__file__)), 'data')


@pytest.fixture
def fano():
    return gen_sts(7)


@pytest.fixture
def fano3(fano):
    return scale(fano, 3)


@pytest.fixture
def sqs8():
    return gen_sqs8()


@pytest.fixture
def two_edges():
    return Hypergraph(2, ((0, 1), (0, 1)))


@pytest.fixture
def single_edge():
    return Hypergraph(3, ((0, 1, 2),))


@pytest.fixture
def pbd13():
    with open(os.path.join(DATA_DIR, 'pbd13_lambda4.hg'), encoding='utf-8') as handle:
        return parse(handle.read())
