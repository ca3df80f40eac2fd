"""Even (X,2)-regular subgraphs of bipartite graphs and their barriers.

A subgraph is even (X,2)-regular when every X-node keeps exactly two
incident pairs and every Y-node keeps an even number. Existence is decided
by a gadget reduction to perfect matching; non-existence is certified, on
small graphs only, by a brute-force search for a barrier (S, T) with
delta(S, T) < 0.
"""

import sys
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from limits import DEFAULT_LIMITS, SolverLimits
from errors import CapExceededError, InternalInvariantError, InvalidArgumentError
from graphs import BipartiteGraph, Pair, SimpleGraph
from matching import perfect_matching


@dataclass(frozen=True)
class DegreeSpec:
    """Degree exactly 2 on X, even degree (0 allowed) on Y."""

    x_degree: int = 2

    def violations(self, graph: BipartiteGraph, sub: BipartiteGraph) -> List[str]:
        problems = []
        if (sub.x_count, sub.y_count) != (graph.x_count, graph.y_count) or not graph.contains(sub.edges):
            problems.append('subgraph is not contained in the graph')
        for x in range(sub.x_count):
            if sub.x_degree(x) != self.x_degree:
                problems.append(f"X-node {x} has degree {sub.x_degree(x)}, expected {self.x_degree}")
        for y in range(sub.y_count):
            if sub.y_degree(y) % 2:
                problems.append(f"Y-node {y} has odd degree {sub.y_degree(y)}")
        return problems

    def is_satisfied(self, graph: BipartiteGraph, sub: BipartiteGraph) -> bool:
        return not self.violations(graph, sub)

    def short_degree_nodes(self, graph: BipartiteGraph) -> List[int]:
        """X-nodes that cannot reach the required degree at all."""
        return [x for x in range(graph.x_count) if graph.x_degree(x) < self.x_degree]


EVEN_X2 = DegreeSpec()


@dataclass(frozen=True)
class GadgetNode:
    """Provenance of a gadget node."""

    kind: str       # 'external' or 'internal'
    side: str       # 'x' or 'y'
    owner: int      # X- or Y-node the gadget belongs to
    pair: int = -1  # index into the original pair list, externals only


@dataclass(frozen=True)
class GadgetGraph:
    """General graph whose perfect matchings are the even (X,2)-regular subgraphs."""

    graph: SimpleGraph
    nodes: Tuple[GadgetNode, ...]
    real_edges: Dict[Pair, Pair] = field(default_factory=dict)

    def counts(self, side: str, owner: int) -> Tuple[int, int]:
        """(external, internal) node counts of one gadget."""
        external = sum(1 for node in self.nodes
                       if node.side == side and node.owner == owner and node.kind == 'external')
        internal = sum(1 for node in self.nodes
                       if node.side == side and node.owner == owner and node.kind == 'internal')
        return external, internal


@dataclass(frozen=True)
class Barrier:
    """Disjoint (S, T) with delta(S, T) < 0."""

    s: FrozenSet[int]
    t: FrozenSet[int]
    delta: int
    q: int

    @property
    def size(self) -> int:
        return len(self.s) + len(self.t)

    def to_dict(self) -> Dict[str, object]:
        return {'S': sorted(self.s), 'T': sorted(self.t), 'delta': self.delta, 'q': self.q}


def _check_sets(graph: BipartiteGraph, s: FrozenSet[int], t: FrozenSet[int]) -> None:
    if s & t:
        raise InvalidArgumentError(f"S and T overlap on {sorted(s & t)}", 'OVERLAPPING_SETS')
    if any(not (0 <= node < graph.x_count) for node in s):
        raise InvalidArgumentError('S must contain X-nodes only', 'BAD_NODE_SET')
    if any(not (0 <= node < graph.node_count) for node in t):
        raise InvalidArgumentError('T contains an unknown node', 'BAD_NODE_SET')


def odd_components(graph: BipartiteGraph, s: Iterable[int], t: Iterable[int]
                   ) -> Tuple[List[Tuple[FrozenSet[int], int]], List[Tuple[FrozenSet[int], int]]]:
    """
    Components of G - (S u T) split by the parity of their edge count to T.

    Returns:
        Tuple of (T-odd, T-even) lists of (component, edges to T)
    """
    s, t = frozenset(s), frozenset(t)
    adj = graph.node_adj
    odd, even = [], []
    for component in graph.components(s | t):
        to_t = sum(1 for node in component for other in adj[node] if other in t)
        (odd if to_t % 2 else even).append((component, to_t))
    return odd, even


def delta(graph: BipartiteGraph, s: Iterable[int], t: Iterable[int]) -> int:
    """
    delta(S,T) = 2|S| + sum_{v in T} deg_{G-S}(v) - 2|T n X| - q(S,T).

    Args:
        graph: G[X, Y] on the unified node axis
        s: X-nodes
        t: nodes of X u Y disjoint from S

    Returns:
        The exact (always even) value
    """
    s, t = frozenset(s), frozenset(t)
    _check_sets(graph, s, t)
    adj = graph.node_adj
    degree_sum = sum(1 for v in t for other in adj[v] if other not in s)
    t_in_x = sum(1 for v in t if graph.is_x(v))
    odd, _ = odd_components(graph, s, t)
    return 2 * len(s) + degree_sum - 2 * t_in_x - len(odd)


def find_barrier_brute_force(graph: BipartiteGraph,
                             limits: SolverLimits = DEFAULT_LIMITS) -> Optional[Barrier]:
    """
    Minimum barrier by exhaustive search over disjoint S, T within X.

    Minimum barriers always have T inside X, so the 3^|X| split states are
    enough. Sizes are tried in increasing order and ties are broken by the
    sorted S, then the sorted T.
    """
    states = 3 ** graph.x_count
    if states > limits.barrier_state_cap:
        raise CapExceededError('barrier search over 3^|X| states', states, limits.barrier_state_cap)

    for size in range(1, graph.x_count + 1):
        found: List[Tuple[Tuple[int, ...], Tuple[int, ...], int]] = []
        for union in combinations(range(graph.x_count), size):
            for sides in product((0, 1), repeat=size):
                s = tuple(x for x, side in zip(union, sides) if side == 0)
                t = tuple(x for x, side in zip(union, sides) if side == 1)
                value = delta(graph, s, t)
                if value < 0:
                    found.append((s, t, value))
        if found:
            s, t, value = min(found, key=lambda item: (item[0], item[1]))
            odd, _ = odd_components(graph, s, t)
            return Barrier(frozenset(s), frozenset(t), value, len(odd))
    return None


def barrier_structure_violations(graph: BipartiteGraph, barrier: Barrier) -> List[str]:
    """
    Clauses of the minimum-barrier structure lemma that fail for ``barrier``.

    (i) T lies in X; (ii) no edges from T to T-even components; (iii) at most
    one edge from each u in T to each T-odd component; (iv) 2(|T| - |S|) >
    sum over T-odd components of (edges to T - 1).
    """
    problems = []
    s, t = barrier.s, barrier.t
    if any(not graph.is_x(v) for v in t):
        problems.append('(i) T is not contained in X')

    odd, even = odd_components(graph, s, t)
    for component, to_t in even:
        if to_t:
            problems.append(f"(ii) T-even component {sorted(component)} has {to_t} edges to T")

    adj = graph.node_adj
    for component, _ in odd:
        for u in t:
            count = sum(1 for other in adj[u] if other in component)
            if count > 1:
                problems.append(f"(iii) node {u} has {count} edges to T-odd component {sorted(component)}")

    excess = sum(to_t - 1 for _, to_t in odd)
    if not 2 * (len(t) - len(s)) > excess:
        problems.append(f"(iv) 2(|T|-|S|)={2 * (len(t) - len(s))} is not above {excess}")
    return problems


def build_gadget(graph: BipartiteGraph, spec: DegreeSpec = EVEN_X2) -> GadgetGraph:
    """
    Tutte-style gadget for the even (X,2)-regular degree spec.

    Every pair (x, y) becomes two external nodes joined by a real edge. An
    X-node of degree d gets d-2 internal nodes joined to all its externals;
    a Y-node of degree d gets d internal nodes joined to all its externals
    plus the pairing edges i1-i2, i3-i4, ...
    """
    short = spec.short_degree_nodes(graph)
    if short:
        raise InvalidArgumentError(
            f"X-nodes {short} have degree below {spec.x_degree}; the instance is infeasible",
            'INFEASIBLE',
            {'xNodes': short},
        )

    nodes: List[GadgetNode] = []
    edges: List[Pair] = []
    real_edges: Dict[Pair, Pair] = {}
    x_externals: Dict[int, List[int]] = {x: [] for x in range(graph.x_count)}
    y_externals: Dict[int, List[int]] = {y: [] for y in range(graph.y_count)}

    for index, (x, y) in enumerate(graph.edges):
        ex, ey = len(nodes), len(nodes) + 1
        nodes.append(GadgetNode('external', 'x', x, index))
        nodes.append(GadgetNode('external', 'y', y, index))
        edges.append((ex, ey))
        real_edges[(ex, ey)] = (x, y)
        x_externals[x].append(ex)
        y_externals[y].append(ey)

    for x in range(graph.x_count):
        externals = x_externals[x]
        for _ in range(len(externals) - spec.x_degree):
            inner = len(nodes)
            nodes.append(GadgetNode('internal', 'x', x))
            edges.extend((ext, inner) for ext in externals)

    for y in range(graph.y_count):
        externals = y_externals[y]
        inners = []
        for _ in externals:
            inner = len(nodes)
            inners.append(inner)
            nodes.append(GadgetNode('internal', 'y', y))
            edges.extend((ext, inner) for ext in externals)
        edges.extend((inners[i], inners[i + 1]) for i in range(0, len(inners) - 1, 2))

    return GadgetGraph(SimpleGraph(len(nodes), tuple(edges)), tuple(nodes), real_edges)


def find_even_x2_subgraph(graph: BipartiteGraph) -> Optional[BipartiteGraph]:
    """
    Even (X,2)-regular subgraph via a perfect matching of the gadget.

    Returns:
        The subgraph, or None when none exists
    """
    short = EVEN_X2.short_degree_nodes(graph)
    if short:
        print(f"[PARITY] infeasible: X-nodes {short[:10]} have degree < 2",
              file=sys.stderr, flush=True)
        return None

    gadget = build_gadget(graph)
    matching = perfect_matching(gadget.graph)
    if matching is None:
        print(f"[PARITY] no perfect matching in gadget with {gadget.graph.node_count} nodes",
              file=sys.stderr, flush=True)
        return None

    kept = [gadget.real_edges[pair] for pair in matching.pairs if pair in gadget.real_edges]
    sub = graph.with_edges(kept)
    problems = EVEN_X2.violations(graph, sub)
    if problems:
        raise InternalInvariantError(f"Gadget matching broke the degree spec: {problems[:3]}")
    return sub
