"""Nice spanning trees and the auxiliary graph of the spanning-tour construction.

A spanning tree of G[X, Y] is nice when every X-node has tree-degree at
most 2. Its X-nodes of degree 2 form the set A with |A| = |Y| - 1; dropping
the leaf X-nodes gives the reduced tree F*, whose odd-degree Y-nodes O are
paired through new degree-2 X-nodes W in the auxiliary graph G*. An even
(X*,2)-regular subgraph Q of G* then closes F* into a connected even
(X,2)-regular subgraph of G.
"""

import sys
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

from limits import DEFAULT_LIMITS, SolverLimits
from errors import (
    CapExceededError,
    HypothesesViolatedError,
    InternalInvariantError,
    InvalidArgumentError,
)
from graphs import BipartiteGraph, DisjointSet, Pair
from parity_factor import EVEN_X2

NO_PARENT = -1


@dataclass(frozen=True)
class NiceTree:
    """Spanning tree of G with X-degrees at most 2, kept as its (x, y) pairs."""

    graph: BipartiteGraph
    edges: Tuple[Pair, ...]

    @cached_property
    def x_tree_degree(self) -> Tuple[int, ...]:
        degrees = [0] * self.graph.x_count
        for x, _ in self.edges:
            degrees[x] += 1
        return tuple(degrees)

    @cached_property
    def a(self) -> FrozenSet[int]:
        """X-nodes of tree-degree 2."""
        return frozenset(x for x, d in enumerate(self.x_tree_degree) if d == 2)

    @cached_property
    def parent(self) -> Tuple[int, ...]:
        """Parent map on the unified node axis, rooted at Y-node 0."""
        graph = self.graph
        adj: List[List[int]] = [[] for _ in range(graph.node_count)]
        for x, y in self.edges:
            adj[x].append(graph.y_node(y))
            adj[graph.y_node(y)].append(x)
        parent = [NO_PARENT] * graph.node_count
        if graph.y_count == 0:
            return tuple(parent)
        root = graph.y_node(0)
        seen = {root}
        stack = [root]
        while stack:
            node = stack.pop()
            for other in adj[node]:
                if other not in seen:
                    seen.add(other)
                    parent[other] = node
                    stack.append(other)
        return tuple(parent)

    def violations(self) -> List[str]:
        graph = self.graph
        problems = []
        if not graph.contains(self.edges):
            problems.append('tree uses pairs outside the graph')
        tree = graph.with_edges(self.edges)
        if len(self.edges) != graph.node_count - 1 or not tree.is_connected():
            problems.append('not a spanning tree')
        over = [x for x, d in enumerate(self.x_tree_degree) if d > 2]
        if over:
            problems.append(f"X-nodes {over} have tree-degree above 2")
        if len(self.a) != graph.y_count - 1:
            problems.append(f"|A|={len(self.a)} but |Y|-1={graph.y_count - 1}")
        return problems


@dataclass(frozen=True)
class ReducedTree:
    """F* = F minus the leaf X-nodes, and its odd-degree Y-nodes O."""

    tree: NiceTree
    edges: Tuple[Pair, ...]
    odd: Tuple[int, ...]

    @property
    def a(self) -> FrozenSet[int]:
        return self.tree.a


@dataclass(frozen=True)
class AuxGraph:
    """
    G* = (G - A) plus W.

    X-node i of G* is the original X-node ``x_origin[i]`` for
    i < len(x_origin) and the new node w_j for i = len(x_origin) + j.
    """

    graph: BipartiteGraph
    x_origin: Tuple[int, ...]
    w_pairs: Tuple[Pair, ...]

    @property
    def w_nodes(self) -> Tuple[int, ...]:
        start = len(self.x_origin)
        return tuple(range(start, start + len(self.w_pairs)))

    def is_w(self, x: int) -> bool:
        return x >= len(self.x_origin)


def _attach_leaves(graph: BipartiteGraph, chosen: Dict[int, Pair]) -> NiceTree:
    """Turn the degree-2 choices into a full tree by hanging every other X-node off its lowest neighbor."""
    edges: List[Pair] = []
    for x in range(graph.x_count):
        if x in chosen:
            y, z = chosen[x]
            edges.extend(((x, y), (x, z)))
        else:
            edges.append((x, graph.x_adj[x][0]))
    return NiceTree(graph, tuple(sorted(edges)))


def _greedy_from(graph: BipartiteGraph, seed: int) -> Optional[Dict[int, Pair]]:
    first, second = graph.x_adj[seed][:2]
    chosen: Dict[int, Pair] = {seed: (first, second)}
    covered = {first, second}

    while len(covered) < graph.y_count:
        best: Optional[Tuple[int, int]] = None
        for x in range(graph.x_count):
            if x in chosen:
                continue
            neighbors = graph.x_adj[x]
            inside = [y for y in neighbors if y in covered]
            fresh = [y for y in neighbors if y not in covered]
            if inside and fresh:
                key = (-len(fresh), x)
                if best is None or key < best:
                    best = key
        if best is None:
            return None
        x = best[1]
        inside = min(y for y in graph.x_adj[x] if y in covered)
        fresh = min(y for y in graph.x_adj[x] if y not in covered)
        chosen[x] = (inside, fresh)
        covered.add(fresh)
    return chosen


def _exhaustive(graph: BipartiteGraph) -> Iterator[Dict[int, Pair]]:
    """Backtracking over X in index order: let x join two Y-components, or skip it."""
    chosen: Dict[int, Pair] = {}

    def search(x: int, parent: List[int], components: int) -> Iterator[Dict[int, Pair]]:
        if components == 1:
            yield dict(chosen)
            return
        if components - 1 > graph.x_count - x:
            return
        dsu = DisjointSet(graph.y_count)
        for pair in combinations(graph.x_adj[x], 2):
            dsu.parent = list(parent)
            if dsu.find(pair[0]) == dsu.find(pair[1]):
                continue
            dsu.union(*pair)
            chosen[x] = pair
            yield from search(x + 1, dsu.parent, components - 1)
            del chosen[x]
        yield from search(x + 1, parent, components)

    yield from search(0, list(range(graph.y_count)), graph.y_count)


def nice_spanning_trees(graph: BipartiteGraph,
                        limits: SolverLimits = DEFAULT_LIMITS) -> Iterator[NiceTree]:
    """
    Distinct nice spanning trees: one greedy tree per seed X-node, then, on
    graphs within ``nice_tree_exhaustive``, every tree the backtracking finds.

    Raises:
        HypothesesViolatedError: fewer than two Y-nodes
        InvalidArgumentError: the graph is disconnected
        CapExceededError: greedy found nothing and the graph is too big to search
    """
    if graph.y_count < 2:
        raise HypothesesViolatedError(f"Nice trees need at least two Y-nodes, got {graph.y_count}")
    if not graph.is_connected():
        raise InvalidArgumentError('Nice spanning trees need a connected graph', 'DISCONNECTED_INPUT')

    seen: Set[Tuple[Pair, ...]] = set()
    for seed in range(graph.x_count):
        if graph.x_degree(seed) < 2:
            continue
        chosen = _greedy_from(graph, seed)
        if chosen is None:
            continue
        tree = _attach_leaves(graph, chosen)
        if tree.edges not in seen:
            seen.add(tree.edges)
            yield tree

    if graph.node_count > limits.nice_tree_exhaustive:
        if not seen:
            raise CapExceededError('exhaustive nice-tree search (|X|+|Y|)',
                                   graph.node_count, limits.nice_tree_exhaustive)
        return

    print(f"[SPANNING] searching nice trees of {graph.node_count} nodes exhaustively",
          file=sys.stderr, flush=True)
    for chosen in _exhaustive(graph):
        tree = _attach_leaves(graph, chosen)
        if tree.edges not in seen:
            seen.add(tree.edges)
            yield tree


def find_nice_spanning_tree(graph: BipartiteGraph,
                            limits: SolverLimits = DEFAULT_LIMITS) -> Optional[NiceTree]:
    """
    Spanning tree with every X-node of tree-degree at most 2.

    Greedy growth from each seed X-node in turn; if no seed succeeds, small
    graphs are settled by exhaustive search.

    Args:
        graph: Connected bipartite graph with |Y| >= 2
        limits: ``nice_tree_exhaustive`` bounds |X| + |Y| for the fallback

    Returns:
        NiceTree, or None when exhaustive search proves that none exists
    """
    return next(nice_spanning_trees(graph, limits), None)


def reduce_tree(tree: NiceTree) -> ReducedTree:
    """Drop the leaf X-nodes of F and collect the odd-degree Y-nodes of what is left."""
    a = tree.a
    edges = tuple(pair for pair in tree.edges if pair[0] in a)

    y_degree = [0] * tree.graph.y_count
    for _, y in edges:
        y_degree[y] += 1
    odd = tuple(y for y, d in enumerate(y_degree) if d % 2)

    if len(odd) % 2 or not odd:
        raise InternalInvariantError(f"Reduced tree has {len(odd)} odd Y-nodes")
    if len(edges) != len(a) + tree.graph.y_count - 1:
        raise InternalInvariantError('Reduced tree is not a tree on A and Y')
    return ReducedTree(tree, edges, odd)


def build_aux_graph(graph: BipartiteGraph, tree: NiceTree, reduced: ReducedTree) -> AuxGraph:
    """
    G* from G: remove A, then add w_j adjacent to the j-th sorted pair of O.

    Raises:
        HypothesesViolatedError: an X-node outside A has degree below 2
    """
    a = tree.a
    x_origin = tuple(x for x in range(graph.x_count) if x not in a)
    short = [x for x in x_origin if graph.x_degree(x) < 2]
    if short:
        raise HypothesesViolatedError(
            f"X-nodes {short} outside A have degree below 2",
            details={'xNodes': short},
        )

    w_pairs = tuple(odd_pairs(reduced.odd))

    edges: List[Pair] = []
    for index, x in enumerate(x_origin):
        edges.extend((index, y) for y in graph.x_adj[x])
    for j, (y, z) in enumerate(w_pairs):
        w = len(x_origin) + j
        edges.extend(((w, y), (w, z)))

    aux = BipartiteGraph(len(x_origin) + len(w_pairs), graph.y_count, tuple(edges))
    return AuxGraph(aux, x_origin, w_pairs)


def assemble(graph: BipartiteGraph, reduced: ReducedTree, aux: AuxGraph,
             factor: BipartiteGraph) -> BipartiteGraph:
    """
    F* together with Q* = Q - W, checked to be a connected even (X,2)-regular subgraph.

    Args:
        graph: The original G
        reduced: F* and O
        aux: G*
        factor: Even (X*,2)-regular subgraph Q of G*

    Returns:
        Spanning subgraph of G
    """
    problems = EVEN_X2.violations(aux.graph, factor)
    if problems:
        raise InvalidArgumentError(f"Factor fails its degree spec: {problems[:3]}", 'BAD_FACTOR')

    q_star = [(aux.x_origin[x], y) for x, y in factor.edges if not aux.is_w(x)]
    overlap = set(q_star) & set(reduced.edges)
    if overlap:
        raise InternalInvariantError(f"F* and Q* share pairs {sorted(overlap)[:5]}")

    union = graph.with_edges(list(reduced.edges) + q_star)
    problems = EVEN_X2.violations(graph, union)
    if not union.is_connected():
        problems.append('assembled subgraph is disconnected')
    if problems:
        raise InternalInvariantError(f"Assembled subgraph is invalid: {problems[:3]}")
    return union


def odd_pairs(odd: Sequence[int]) -> List[Pair]:
    """Sorted pairing (O[0], O[1]), (O[2], O[3]), ... used for W."""
    return [(odd[i], odd[i + 1]) for i in range(0, len(odd) - 1, 2)]
