"""Euler families and tours of hypergraphs.

A closed walk alternates vertices and edges, v1 e1 v2 e2 ... vt et, with
{vi, vi+1} inside ei and vi != vi+1 (indices cyclic). An Euler family is a
set of closed walks using every edge index exactly once; a single walk is a
tour, and a tour visiting every vertex is spanning.

Walks are read off even (X,2)-regular subgraphs of the incidence graph:
every X-node (edge) keeps two incidences, so each component is an Eulerian
graph whose circuit passes each edge-node exactly once.
"""

import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from limits import DEFAULT_LIMITS, SolverLimits
from errors import (
    CapExceededError,
    HypothesesViolatedError,
    InternalInvariantError,
    InvalidArgumentError,
)
from graphs import BipartiteGraph
from hypergraph import Hypergraph, incidence
from parity_factor import EVEN_X2, find_even_x2_subgraph
from spanning import NiceTree, assemble, build_aux_graph, nice_spanning_trees, reduce_tree
from utils.formatters import parse_walk_lines


@dataclass(frozen=True)
class ClosedWalk:
    """Cyclic walk v1 e1 ... vt et; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: Tuple[int, ...]
    edges: Tuple[int, ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.edges):
            raise InvalidArgumentError('A walk needs as many vertices as edges', 'MALFORMED_WALK')

    @property
    def length(self) -> int:
        return len(self.edges)

    def steps(self) -> List[Tuple[int, int, int]]:
        """(v_i, e_i, v_{i+1}) for every position, cyclically."""
        t = self.length
        return [(self.vertices[i], self.edges[i], self.vertices[(i + 1) % t]) for i in range(t)]


@dataclass(frozen=True)
class EulerFamily:
    walks: Tuple[ClosedWalk, ...] = ()

    @property
    def edge_count(self) -> int:
        return sum(walk.length for walk in self.walks)


@dataclass(frozen=True)
class Junction:
    """Consecutive edges ``before`` and ``after`` of a tour meeting at ``vertex``."""

    vertex: int
    before: int
    after: int


@dataclass
class TourReport:
    """Verification result; flags are recomputed from the walks, never taken on trust."""

    walks: Tuple[ClosedWalk, ...]
    is_tour: bool
    is_spanning: bool
    violations: List[str] = field(default_factory=list)
    provenance: Optional[str] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> Dict[str, Any]:
        return {
            'walkCount': len(self.walks),
            'edgeCount': sum(walk.length for walk in self.walks),
            'isTour': self.is_tour,
            'isSpanning': self.is_spanning,
            'violations': list(self.violations),
            'provenance': self.provenance,
        }


@dataclass(frozen=True)
class SpanningOutcome:
    """Result of the spanning pipeline; ``stage`` names the failing stage, None on success."""

    walk: Optional[ClosedWalk]
    stage: Optional[str] = None
    reason: Optional[str] = None
    capped: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            'found': self.walk is not None,
            'stage': self.stage,
            'reason': self.reason,
            'capped': self.capped,
        }


def _circuit(adj: Dict[int, List[int]], start: int) -> List[int]:
    """Hierholzer circuit from ``start``, scanning neighbors in ascending order."""
    remaining = {node: sorted(neighbors, reverse=True) for node, neighbors in adj.items()}
    path = [start]
    circuit = []
    while path:
        node = path[-1]
        if remaining[node]:
            nxt = remaining[node].pop()
            remaining[nxt].remove(node)
            path.append(nxt)
        else:
            circuit.append(path.pop())
    return circuit[::-1]


def _walk_from_component(sub: BipartiteGraph, component: Sequence[int]) -> ClosedWalk:
    adj = {node: list(sub.node_adj[node]) for node in component}
    start = min(node for node in component if sub.is_x(node))
    low, high = sorted(adj[start])

    circuit = _circuit(adj, start)
    if circuit[1] != high:
        circuit.reverse()
    # circuit = start, high, ..., low, start; rotate so the walk opens low, start, high
    nodes = [circuit[-2]] + circuit[:-2]

    vertices = tuple(node - sub.x_count for node in nodes[0::2])
    edges = tuple(nodes[1::2])
    return ClosedWalk(vertices, edges)


def extract_family(hypergraph: Hypergraph, sub: BipartiteGraph) -> EulerFamily:
    """
    One closed walk per component of an even (X,2)-regular subgraph.

    Args:
        hypergraph: H
        sub: Subgraph of incidence(H) with X-degrees 2 and even Y-degrees

    Returns:
        EulerFamily ordered by the lowest edge index of each walk
    """
    problems = EVEN_X2.violations(incidence(hypergraph), sub)
    if problems:
        raise InvalidArgumentError(f"Subgraph fails its degree spec: {problems[:3]}", 'BAD_FACTOR')

    walks = []
    for component in sub.components():
        if not any(sub.is_x(node) for node in component):
            continue
        walks.append(_walk_from_component(sub, sorted(component)))
    walks.sort(key=lambda walk: min(walk.edges))
    return EulerFamily(tuple(walks))


def verify(hypergraph: Hypergraph, family: EulerFamily, require_spanning: bool = False,
           require_tour: bool = False, provenance: Optional[str] = None) -> TourReport:
    """
    Check every walk condition and list each violation found.

    Args:
        hypergraph: H
        family: Walks to check
        require_spanning: Every vertex must be visited
        require_tour: There must be exactly one walk

    Returns:
        TourReport with recomputed flags
    """
    violations: List[str] = []
    n, m = hypergraph.n, hypergraph.m
    uses = [0] * m
    visited = set()

    for w, walk in enumerate(family.walks):
        if walk.length < 2:
            violations.append(f"walk {w}: needs at least 2 edges, has {walk.length}")
        for i, (v, e, nxt) in enumerate(walk.steps()):
            if not (0 <= v < n):
                violations.append(f"walk {w}: vertex {v} at position {i} is out of range")
                continue
            visited.add(v)
            if not (0 <= e < m):
                violations.append(f"walk {w}: edge {e} at position {i} is out of range")
                continue
            uses[e] += 1
            if v == nxt:
                violations.append(f"walk {w}: v_{i + 1} = v_{i + 2} = {v}")
            edge = hypergraph.edge_sets[e]
            if v not in edge or nxt not in edge:
                violations.append(f"walk {w}: edge {e} does not contain both {v} and {nxt}")

    missing = [e for e, count in enumerate(uses) if count == 0]
    repeated = [e for e, count in enumerate(uses) if count > 1]
    if missing:
        violations.append(f"edges never traversed: {missing[:20]}")
    if repeated:
        violations.append(f"edges traversed more than once: {repeated[:20]}")

    walks_ok = not violations
    is_tour = walks_ok and len(family.walks) == 1
    unvisited = [v for v in range(n) if v not in visited]
    is_spanning = is_tour and not unvisited

    if require_tour and len(family.walks) != 1:
        violations.append(f"expected a single walk, got {len(family.walks)}")
    if require_spanning and unvisited:
        violations.append(f"vertices never visited: {unvisited[:20]}")

    return TourReport(tuple(family.walks), is_tour, is_spanning, violations, provenance)


def _self_check(hypergraph: Hypergraph, family: EulerFamily, spanning: bool, tour: bool,
                provenance: str) -> TourReport:
    report = verify(hypergraph, family, spanning, tour, provenance)
    if not report.ok:
        raise InternalInvariantError(f"{provenance} produced an invalid walk: {report.violations[:3]}")
    return report


def euler_family(hypergraph: Hypergraph) -> Optional[EulerFamily]:
    """Euler family from an even (E,2)-regular subgraph of the incidence graph, or None."""
    sub = find_even_x2_subgraph(incidence(hypergraph))
    if sub is None:
        return None
    family = extract_family(hypergraph, sub)
    _self_check(hypergraph, family, False, False, 'family')
    return family


def _fail(stage: str, reason: str, capped: bool = False) -> SpanningOutcome:
    print(f"[SPANNING] stage {stage} failed: {reason}", file=sys.stderr, flush=True)
    return SpanningOutcome(None, stage, reason, capped)


def _tour_from_tree(hypergraph: Hypergraph, graph: BipartiteGraph,
                    tree: NiceTree) -> Tuple[Optional[ClosedWalk], str, str]:
    """One pass of reduce, auxiliary graph, factor, assembly and traversal."""
    reduced = reduce_tree(tree)

    try:
        aux = build_aux_graph(graph, tree, reduced)
    except HypothesesViolatedError as e:
        return None, 'aux-graph', e.message

    factor = find_even_x2_subgraph(aux.graph)
    if factor is None:
        return None, 'parity-factor', 'auxiliary graph has no even (X,2)-regular subgraph'

    union = assemble(graph, reduced, aux, factor)
    family = extract_family(hypergraph, union)
    if len(family.walks) != 1:
        return None, 'traverse', f"assembled subgraph split into {len(family.walks)} walks"
    return family.walks[0], '', ''


def run_spanning_pipeline(hypergraph: Hypergraph,
                          limits: SolverLimits = DEFAULT_LIMITS) -> SpanningOutcome:
    """
    Nice tree, reduced tree, auxiliary graph, factor, assembly, traversal.

    Nice trees are tried in the order ``nice_spanning_trees`` yields them,
    at most ``limits.tree_attempts`` of them; a failure is reported with
    the stage the first tree failed at.

    Returns:
        SpanningOutcome with a verified spanning tour, or the failing stage
    """
    graph = incidence(hypergraph)
    trees = nice_spanning_trees(graph, limits)
    first_failure: Optional[Tuple[str, str]] = None
    attempts = 0

    while attempts < limits.tree_attempts:
        try:
            tree = next(trees, None)
        except CapExceededError as e:
            return _fail('nice-tree', e.message, capped=True)
        except (HypothesesViolatedError, InvalidArgumentError) as e:
            return _fail('nice-tree', e.message)
        if tree is None:
            break
        attempts += 1

        walk, stage, reason = _tour_from_tree(hypergraph, graph, tree)
        if walk is not None:
            _self_check(hypergraph, EulerFamily((walk,)), True, True, 'spanning pipeline')
            print(f"[SPANNING] tour with {walk.length} edges over {hypergraph.n} vertices "
                  f"(nice tree {attempts})", file=sys.stderr, flush=True)
            return SpanningOutcome(walk)
        if first_failure is None:
            first_failure = (stage, reason)

    if first_failure is None:
        return _fail('nice-tree', 'no nice spanning tree exists')
    stage, reason = first_failure
    return _fail(stage, f"{reason} ({attempts} nice trees tried)")


def spanning_euler_tour(hypergraph: Hypergraph,
                        limits: SolverLimits = DEFAULT_LIMITS) -> Optional[ClosedWalk]:
    return run_spanning_pipeline(hypergraph, limits).walk


def euler_tour(hypergraph: Hypergraph,
               limits: SolverLimits = DEFAULT_LIMITS) -> Optional[ClosedWalk]:
    """
    Euler tour that need not visit isolated vertices.

    Runs the spanning pipeline on H without its isolated vertices and maps
    the walk back; falls back to a single-walk Euler family.
    """
    if hypergraph.m == 0:
        return None

    used = [v for v in range(hypergraph.n) if hypergraph.vertex_degrees[v]]
    relabel = {v: i for i, v in enumerate(used)}
    trimmed = Hypergraph(len(used), tuple(tuple(relabel[v] for v in edge) for edge in hypergraph.edges))

    walk = spanning_euler_tour(trimmed, limits)
    if walk is not None:
        walk = ClosedWalk(tuple(used[v] for v in walk.vertices), walk.edges)
        _self_check(hypergraph, EulerFamily((walk,)), False, True, 'tour')
        return walk

    family = euler_family(hypergraph)
    if family is not None and len(family.walks) == 1:
        return family.walks[0]
    return None


def line_graph_hamiltonian_cycle(hypergraph: Hypergraph, tour: ClosedWalk) -> List[int]:
    """
    Hamiltonian cycle of the line graph read off an Euler tour.

    Returns:
        Edge indices e1..et; consecutive entries share the vertex between them
    """
    if hypergraph.m < 3:
        raise InvalidArgumentError(f"Line graph on {hypergraph.m} nodes has no cycle", 'TOO_FEW_EDGES')
    report = verify(hypergraph, EulerFamily((tour,)), require_tour=True)
    if not report.ok:
        raise InvalidArgumentError(f"Not an Euler tour: {report.violations[:3]}", 'INVALID_TOUR')

    cycle = list(tour.edges)
    t = len(cycle)
    for i in range(t):
        shared = tour.vertices[(i + 1) % t]
        here, there = hypergraph.edge_sets[cycle[i]], hypergraph.edge_sets[cycle[(i + 1) % t]]
        if shared not in here or shared not in there:
            raise InternalInvariantError(f"edges {cycle[i]} and {cycle[(i + 1) % t]} do not meet")
    return cycle


def emit_ucycle(tour: ClosedWalk) -> List[Junction]:
    """Rank-two universal cycle: junction (v_{i+1}, e_i, e_{i+1}) for every i."""
    t = tour.length
    return [Junction(tour.vertices[(i + 1) % t], tour.edges[i], tour.edges[(i + 1) % t])
            for i in range(t)]


def parse_walks(text: str) -> EulerFamily:
    """Parse a tour file into an EulerFamily (validity is left to ``verify``)."""
    return EulerFamily(tuple(ClosedWalk(vertices, edges) for vertices, edges in parse_walk_lines(text)))
