import networkx as nx
from hypothesis import given, settings

from graphs import SimpleGraph, petersen_graph
from matching import max_matching, perfect_matching
from oracle import brute_matching
from strategies import simple_graphs


def _is_matching(graph, matching):
    own = {frozenset(edge) for edge in graph.edges}
    covered = [v for pair in matching.pairs for v in pair]
    return len(covered) == len(set(covered)) and all(frozenset(pair) in own for pair in matching.pairs)


def test_triangle_with_pendants():
    graph = SimpleGraph(6, ((0, 1), (1, 2), (2, 0), (2, 3), (0, 4), (4, 5)))
    matching = max_matching(graph)
    assert matching.size == 3
    assert matching.is_perfect()


def test_petersen_has_a_perfect_matching():
    graph = petersen_graph()
    matching = perfect_matching(graph)
    assert matching is not None
    assert _is_matching(graph, matching)
    assert matching.size == 5


def test_star_has_no_perfect_matching():
    graph = SimpleGraph(4, ((0, 1), (0, 2), (0, 3)))
    assert perfect_matching(graph) is None
    assert max_matching(graph).size == 1


def test_odd_node_count_has_no_perfect_matching():
    assert perfect_matching(SimpleGraph(3, ((0, 1), (1, 2)))) is None


def test_empty_graph():
    assert max_matching(SimpleGraph(0)).size == 0
    assert perfect_matching(SimpleGraph(0)).is_perfect()


def test_mate_array_round_trip():
    matching = max_matching(SimpleGraph(4, ((0, 1), (2, 3))))
    assert matching.mate_of() == [1, 0, 3, 2]


@settings(max_examples=500, deadline=None)
@given(simple_graphs(max_nodes=12))
def test_matches_brute_force(graph):
    matching = max_matching(graph)
    assert _is_matching(graph, matching)
    assert matching.size == brute_matching(graph)


@settings(max_examples=200, deadline=None)
@given(simple_graphs(max_nodes=12))
def test_matches_networkx(graph):
    reference = nx.Graph()
    reference.add_nodes_from(range(graph.node_count))
    reference.add_edges_from(graph.edges)
    expected = len(nx.max_weight_matching(reference, maxcardinality=True))
    assert max_matching(graph).size == expected
    assert (perfect_matching(graph) is not None) == (2 * expected == graph.node_count)


def test_failed_searches_leave_no_trace():
    # Triangles keep one node exposed each; the blossom pair at the end
    # needs clean labels after all of those failed searches.
    triangles = [(3 * i + a, 3 * i + b) for i in range(20) for a, b in ((0, 1), (1, 2), (0, 2))]
    tail = [(60, 61), (61, 62), (62, 63), (63, 64), (64, 60), (64, 65)]
    graph = SimpleGraph(66, tuple(triangles + tail))
    matching = max_matching(graph)
    assert _is_matching(graph, matching)
    assert matching.size == 20 + 3


@settings(max_examples=100, deadline=None)
@given(simple_graphs(max_nodes=40))
def test_large_graphs_match_networkx(graph):
    reference = nx.Graph()
    reference.add_nodes_from(range(graph.node_count))
    reference.add_edges_from(graph.edges)
    matching = max_matching(graph)
    assert _is_matching(graph, matching)
    assert matching.size == len(nx.max_weight_matching(reference, maxcardinality=True))
