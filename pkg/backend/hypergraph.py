"""Hypergraph data model, file format and structural queries.

Vertices are the dense ids ``0..n-1``. Edges keep their input order and the
position of an edge in that order is its identity everywhere else in the
package; repeated vertex sets encode multiplicity.
"""

import random
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from limits import DEFAULT_LIMITS, SolverLimits
from errors import CapExceededError, InvalidArgumentError, ParseError
from graphs import BipartiteGraph, DisjointSet
from utils.validators import (
    sanitize_line,
    validate_distinct,
    validate_edge_tokens,
    validate_vertex_count,
    validate_vertex_range,
)

Edge = Tuple[int, ...]


@dataclass(frozen=True)
class Flag:
    """An incident (vertex, edge index) pair."""

    vertex: int
    edge: int


@dataclass(frozen=True)
class Hypergraph:
    """Vertex count plus an ordered multiset of edges."""

    n: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n < 0:
            raise InvalidArgumentError('Vertex count must be non-negative', 'MALFORMED_HEADER')
        normalized = []
        for index, edge in enumerate(self.edges):
            vertices = [int(v) for v in edge]
            if not vertices:
                raise InvalidArgumentError(f"Edge {index} is empty", 'EMPTY_EDGE')
            is_valid, error = validate_vertex_range(vertices, self.n)
            if not is_valid:
                raise InvalidArgumentError(f"Edge {index}: {error}", 'VERTEX_OUT_OF_RANGE')
            is_valid, error = validate_distinct(vertices)
            if not is_valid:
                raise InvalidArgumentError(f"Edge {index}: {error}", 'REPEATED_VERTEX')
            normalized.append(tuple(sorted(vertices)))
        object.__setattr__(self, 'edges', tuple(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_sets(self) -> Tuple[FrozenSet[int], ...]:
        return tuple(frozenset(edge) for edge in self.edges)

    @property
    def rank(self) -> int:
        return max((len(edge) for edge in self.edges), default=0)

    @property
    def corank(self) -> int:
        return min((len(edge) for edge in self.edges), default=0)

    @property
    def max_multiplicity(self) -> int:
        counts = Counter(self.edges)
        return max(counts.values(), default=0)

    @property
    def incidence_size(self) -> int:
        """Number of flags, i.e. the sum of the edge sizes."""
        return sum(len(edge) for edge in self.edges)

    @cached_property
    def vertex_degrees(self) -> Tuple[int, ...]:
        degrees = [0] * self.n
        for edge in self.edges:
            for v in edge:
                degrees[v] += 1
        return tuple(degrees)

    def flags(self) -> List[Flag]:
        return [Flag(v, i) for i, edge in enumerate(self.edges) for v in edge]

    def components(self) -> List[FrozenSet[int]]:
        """Vertex sets of the components; isolated vertices are singletons."""
        return _components(self.n, self.edges)

    @property
    def component_count(self) -> int:
        return len(self.components())

    def is_connected(self) -> bool:
        return self.component_count == 1


@dataclass(frozen=True)
class IncidenceGraph(BipartiteGraph):
    """Incidence graph: X-node i is edge i, Y-node v is vertex v."""


@dataclass(frozen=True)
class Profile:
    """Counting summary of a hypergraph."""

    n: int
    m: int
    corank: int
    rank: int
    max_multiplicity: int
    component_count: int
    min_degrees: Dict[int, int]
    max_degrees: Dict[int, int]

    def min_degree(self, t: int) -> int:
        return self.min_degrees[t]

    def max_degree(self, t: int) -> int:
        return self.max_degrees[t]

    def to_dict(self) -> Dict[str, object]:
        return {
            'n': self.n,
            'm': self.m,
            'corank': self.corank,
            'rank': self.rank,
            'maxMultiplicity': self.max_multiplicity,
            'componentCount': self.component_count,
            'minDegrees': {str(t): d for t, d in sorted(self.min_degrees.items())},
            'maxDegrees': {str(t): d for t, d in sorted(self.max_degrees.items())},
        }


def _components(n: int, edges: Iterable[Iterable[int]]) -> List[FrozenSet[int]]:
    dsu = DisjointSet(n)
    for edge in edges:
        vertices = list(edge)
        for v in vertices[1:]:
            dsu.union(vertices[0], v)
    groups: Dict[int, List[int]] = {}
    for v in range(n):
        groups.setdefault(dsu.find(v), []).append(v)
    return [frozenset(group) for _, group in sorted(groups.items())]


def parse(text: str) -> Hypergraph:
    """
    Parse the hypergraph file format.

    The first non-comment line holds n; every later non-empty line is one
    edge. Lines starting with '#' are comments.

    Args:
        text: File content

    Returns:
        Hypergraph with edges in file order
    """
    n: Optional[int] = None
    edges: List[Edge] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = sanitize_line(raw)
        if not line:
            continue

        if n is None:
            is_valid, error = validate_vertex_count(line)
            if not is_valid:
                raise ParseError(error, 'MALFORMED_HEADER', line_no)
            n = int(line)
            continue

        tokens = line.split()
        is_valid, error = validate_edge_tokens(tokens)
        if not is_valid:
            raise ParseError(error, 'MALFORMED_EDGE', line_no)
        vertices = [int(token) for token in tokens]

        is_valid, error = validate_vertex_range(vertices, n)
        if not is_valid:
            raise ParseError(error, 'VERTEX_OUT_OF_RANGE', line_no)

        is_valid, error = validate_distinct(vertices)
        if not is_valid:
            raise ParseError(error, 'REPEATED_VERTEX', line_no)

        edges.append(tuple(vertices))

    if n is None:
        raise ParseError('Missing vertex count header', 'MALFORMED_HEADER')

    return Hypergraph(n, tuple(edges))


def format_hypergraph(hypergraph: Hypergraph, comments: Sequence[str] = ()) -> str:
    """Write a hypergraph in the file format, comments first."""
    lines = [f"# {comment}" for comment in comments]
    lines.append(str(hypergraph.n))
    lines.extend(' '.join(str(v) for v in edge) for edge in hypergraph.edges)
    return '\n'.join(lines) + '\n'


def incidence(hypergraph: Hypergraph) -> IncidenceGraph:
    """Incidence graph of a hypergraph (always simple)."""
    pairs = tuple((i, v) for i, edge in enumerate(hypergraph.edges) for v in edge)
    return IncidenceGraph(hypergraph.m, hypergraph.n, pairs)


def t_degrees(hypergraph: Hypergraph, t: int,
              limits: SolverLimits = DEFAULT_LIMITS) -> Tuple[int, int]:
    """
    Minimum and maximum t-degree over all t-subsets of the vertices.

    Subsets contained in no edge have degree 0, so the minimum is 0 as soon
    as fewer than C(n, t) distinct subsets are covered.

    Returns:
        Tuple of (delta_t, Delta_t)
    """
    n = hypergraph.n
    if t < 0 or t > n:
        raise InvalidArgumentError(f"t={t} is outside 0..{n}", 'T_OUT_OF_RANGE')
    if n > limits.degree_max_n:
        raise CapExceededError('t-degree enumeration (vertex count)', n, limits.degree_max_n)
    if t > limits.degree_max_t:
        raise CapExceededError('t-degree enumeration (subset size)', t, limits.degree_max_t)
    if t == 0:
        return hypergraph.m, hypergraph.m

    counts: Counter = Counter()
    for edge in hypergraph.edges:
        counts.update(combinations(edge, t))

    largest = max(counts.values(), default=0)
    if len(counts) < comb(n, t):
        return 0, largest
    return min(counts.values()), largest


def profile(hypergraph: Hypergraph, t_list: Iterable[int],
            limits: SolverLimits = DEFAULT_LIMITS) -> Profile:
    """
    Exact counting profile: corank, rank, multiplicity, components, t-degrees.

    Args:
        hypergraph: The hypergraph
        t_list: t values in 1..rank for which delta_t and Delta_t are wanted
        limits: Enumeration caps

    Returns:
        Profile
    """
    rank = hypergraph.rank
    min_degrees: Dict[int, int] = {}
    max_degrees: Dict[int, int] = {}

    for t in sorted(set(t_list)):
        if t < 1 or t > rank:
            raise InvalidArgumentError(f"t={t} is outside 1..{rank}", 'T_OUT_OF_RANGE')
        min_degrees[t], max_degrees[t] = t_degrees(hypergraph, t, limits)

    return Profile(
        n=hypergraph.n,
        m=hypergraph.m,
        corank=hypergraph.corank,
        rank=rank,
        max_multiplicity=hypergraph.max_multiplicity,
        component_count=hypergraph.component_count,
        min_degrees=min_degrees,
        max_degrees=max_degrees,
    )


def is_flag_connected(hypergraph: Hypergraph, k: int,
                      limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    """
    Whether the hypergraph stays connected after removing any < k flags.

    Removing a flag (v, e) replaces e by e minus v. Connectivity can only
    drop as more flags are removed, so checking every set of exactly
    k-1 flags covers all smaller sets too.
    """
    if k < 1:
        raise InvalidArgumentError(f"k={k} must be at least 1", 'BAD_THRESHOLD')
    if not hypergraph.is_connected():
        return False
    if k == 1:
        return True

    flags = hypergraph.flags()
    size = min(k - 1, len(flags))
    states = comb(len(flags), size)
    if states > limits.flag_subset_cap:
        raise CapExceededError(f"flag removal sets of size {size}", states, limits.flag_subset_cap)

    for removed in combinations(flags, size):
        drop: Dict[int, set] = {}
        for flag in removed:
            drop.setdefault(flag.edge, set()).add(flag.vertex)
        remaining = [
            [v for v in edge if v not in drop.get(i, ())]
            for i, edge in enumerate(hypergraph.edges)
        ]
        if len(_components(hypergraph.n, remaining)) != 1:
            return False

    return True


def strong_cut_edges(hypergraph: Hypergraph) -> List[int]:
    """Indices of edges e with c(H - e) = c(H) + |e| - 1."""
    base = hypergraph.component_count
    result = []
    for i, edge in enumerate(hypergraph.edges):
        others = hypergraph.edges[:i] + hypergraph.edges[i + 1:]
        if len(_components(hypergraph.n, others)) == base + len(edge) - 1:
            result.append(i)
    return result


def flag_spanning_tour_exists(hypergraph: Hypergraph) -> bool:
    """Parity criterion: every vertex degree and every edge size is even."""
    return (all(d % 2 == 0 for d in hypergraph.vertex_degrees)
            and all(len(edge) % 2 == 0 for edge in hypergraph.edges))


def random_hypergraph(n: int, m: int, sizes: Tuple[int, int] = (2, 5),
                      seed: Optional[int] = None) -> Hypergraph:
    """
    Random hypergraph with edge sizes drawn uniformly from ``sizes``.

    Sizes are clipped to n. Used for property tests and ``gen random``.
    """
    if n < 1:
        raise InvalidArgumentError('Random hypergraphs need at least one vertex', 'BAD_SIZE')
    low, high = sizes
    if low < 1 or high < low:
        raise InvalidArgumentError(f"Bad size range {sizes}", 'BAD_SIZE')
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        size = rng.randint(min(low, n), min(high, n))
        edges.append(tuple(sorted(rng.sample(range(n), size))))
    return Hypergraph(n, tuple(edges))
