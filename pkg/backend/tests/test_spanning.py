import pytest

from limits import SolverLimits
from errors import CapExceededError, HypothesesViolatedError, InvalidArgumentError
from graphs import BipartiteGraph
from hypergraph import Hypergraph, incidence
from parity_factor import EVEN_X2, find_even_x2_subgraph
from spanning import (
    assemble,
    build_aux_graph,
    find_nice_spanning_tree,
    nice_spanning_trees,
    odd_pairs,
    reduce_tree,
)


def _degree_two_count(tree):
    return sum(1 for d in tree.x_tree_degree if d == 2)


class TestNiceTree:
    def test_fano(self, fano):
        tree = find_nice_spanning_tree(incidence(fano))
        assert tree.violations() == []
        assert _degree_two_count(tree) == 6
        assert len(tree.edges) == 13

    def test_sqs8(self, sqs8):
        tree = find_nice_spanning_tree(incidence(sqs8))
        assert tree.violations() == []
        assert len(tree.a) == 7

    def test_parent_map_is_rooted_at_first_vertex(self, fano):
        graph = incidence(fano)
        tree = find_nice_spanning_tree(graph)
        root = graph.y_node(0)
        assert tree.parent[root] == -1
        assert all(tree.parent[node] != -1 for node in range(graph.node_count) if node != root)

    def test_single_edge_has_none(self, single_edge):
        assert find_nice_spanning_tree(incidence(single_edge)) is None

    def test_needs_two_y_nodes(self):
        with pytest.raises(HypothesesViolatedError):
            find_nice_spanning_tree(BipartiteGraph(1, 1, ((0, 0),)))

    def test_disconnected_input(self):
        graph = incidence(Hypergraph(4, ((0, 1), (2, 3))))
        with pytest.raises(InvalidArgumentError) as info:
            find_nice_spanning_tree(graph)
        assert info.value.code == 'DISCONNECTED_INPUT'

    def test_exhaustive_cap(self):
        single = incidence(Hypergraph(4, ((0, 1, 2, 3),)))
        with pytest.raises(CapExceededError):
            find_nice_spanning_tree(single, SolverLimits(nice_tree_exhaustive=3))

    def test_trees_are_distinct_and_nice(self, fano):
        trees = list(nice_spanning_trees(incidence(fano)))
        assert len(trees) == len({tree.edges for tree in trees})
        assert all(tree.violations() == [] for tree in trees)


class TestConstruction:
    def test_reduced_tree(self, fano):
        tree = find_nice_spanning_tree(incidence(fano))
        reduced = reduce_tree(tree)
        assert len(reduced.odd) in (2, 4, 6)
        assert all(x in tree.a for x, _ in reduced.edges)

    def test_odd_pairs(self):
        assert odd_pairs((1, 4, 5, 9)) == [(1, 4), (5, 9)]

    def test_aux_graph_and_assembly(self, sqs8):
        graph = incidence(sqs8)
        tree = find_nice_spanning_tree(graph)
        reduced = reduce_tree(tree)
        aux = build_aux_graph(graph, tree, reduced)

        assert len(aux.x_origin) == graph.x_count - len(tree.a)
        assert len(aux.w_nodes) == len(reduced.odd) // 2
        for w, (y, z) in zip(aux.w_nodes, aux.w_pairs):
            assert aux.graph.x_adj[w] == (y, z)

        factor = find_even_x2_subgraph(aux.graph)
        assert factor is not None
        union = assemble(graph, reduced, aux, factor)
        assert EVEN_X2.is_satisfied(graph, union)
        assert union.is_connected()

    def test_aux_graph_rejects_short_leaves(self):
        # Edge 2 is a single vertex: it stays outside A with degree 1.
        hypergraph = Hypergraph(3, ((0, 1), (1, 2), (2,)))
        graph = incidence(hypergraph)
        tree = find_nice_spanning_tree(graph)
        reduced = reduce_tree(tree)
        with pytest.raises(HypothesesViolatedError) as info:
            build_aux_graph(graph, tree, reduced)
        assert info.value.details == {'xNodes': [2]}

    def test_assemble_rejects_bad_factor(self, sqs8):
        graph = incidence(sqs8)
        tree = find_nice_spanning_tree(graph)
        reduced = reduce_tree(tree)
        aux = build_aux_graph(graph, tree, reduced)
        with pytest.raises(InvalidArgumentError) as info:
            assemble(graph, reduced, aux, aux.graph.with_edges(()))
        assert info.value.code == 'BAD_FACTOR'
