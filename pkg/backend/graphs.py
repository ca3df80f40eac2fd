"""Plain graph containers used by the solvers.

Bipartite graphs number their nodes on a single axis: X-node ``i`` is node
``i`` and Y-node ``j`` is node ``x_count + j``. Node sets passed to the
parity-factor routines (S, T, components) use this numbering.
"""

from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Set, Tuple

from errors import InvalidArgumentError

Pair = Tuple[int, int]


class DisjointSet:
    """Union-find over ``0..size-1`` with path halving."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.count = size

    def find(self, item: int) -> int:
        parent = self.parent
        while parent[item] != item:
            parent[item] = parent[parent[item]]
            item = parent[item]
        return item

    def union(self, a: int, b: int) -> bool:
        root_a, root_b = self.find(a), self.find(b)
        if root_a == root_b:
            return False
        if root_b < root_a:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.count -= 1
        return True


@dataclass(frozen=True)
class BipartiteGraph:
    """Simple bipartite graph G[X, Y] given by its (x, y) pairs."""

    x_count: int
    y_count: int
    edges: Tuple[Pair, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.x_count < 0 or self.y_count < 0:
            raise InvalidArgumentError('Node counts must be non-negative', 'BAD_GRAPH')
        normalized = tuple(sorted((int(x), int(y)) for x, y in self.edges))
        for i, (x, y) in enumerate(normalized):
            if not (0 <= x < self.x_count and 0 <= y < self.y_count):
                raise InvalidArgumentError(f"Pair ({x}, {y}) is out of range", 'BAD_GRAPH')
            if i and normalized[i - 1] == (x, y):
                raise InvalidArgumentError(f"Parallel pair ({x}, {y})", 'BAD_GRAPH')
        object.__setattr__(self, 'edges', normalized)

    @property
    def node_count(self) -> int:
        return self.x_count + self.y_count

    def y_node(self, y: int) -> int:
        return self.x_count + y

    def is_x(self, node: int) -> bool:
        return node < self.x_count

    @cached_property
    def x_adj(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted Y-neighbors of every X-node."""
        adj: List[List[int]] = [[] for _ in range(self.x_count)]
        for x, y in self.edges:
            adj[x].append(y)
        return tuple(tuple(neighbors) for neighbors in adj)

    @cached_property
    def y_adj(self) -> Tuple[Tuple[int, ...], ...]:
        """Sorted X-neighbors of every Y-node."""
        adj: List[List[int]] = [[] for _ in range(self.y_count)]
        for x, y in self.edges:
            adj[y].append(x)
        return tuple(tuple(neighbors) for neighbors in adj)

    @cached_property
    def node_adj(self) -> Tuple[Tuple[int, ...], ...]:
        """Adjacency on the unified node axis, sorted by node id."""
        return self.x_adj_nodes + tuple(self.y_adj)

    @cached_property
    def x_adj_nodes(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(tuple(self.x_count + y for y in ys) for ys in self.x_adj)

    def x_degree(self, x: int) -> int:
        return len(self.x_adj[x])

    def y_degree(self, y: int) -> int:
        return len(self.y_adj[y])

    def degree(self, node: int) -> int:
        return len(self.node_adj[node])

    def components(self, removed: Iterable[int] = ()) -> List[FrozenSet[int]]:
        """Connected components of G minus ``removed`` (unified node ids)."""
        gone = set(removed)
        dsu = DisjointSet(self.node_count)
        for x, y in self.edges:
            if x not in gone and self.x_count + y not in gone:
                dsu.union(x, self.x_count + y)
        groups: Dict[int, Set[int]] = {}
        for node in range(self.node_count):
            if node not in gone:
                groups.setdefault(dsu.find(node), set()).add(node)
        return [frozenset(group) for _, group in sorted(groups.items())]

    def is_connected(self) -> bool:
        return self.node_count > 0 and len(self.components()) == 1

    def with_edges(self, pairs: Iterable[Pair]) -> 'BipartiteGraph':
        """Subgraph on the same node sets with the given pairs."""
        return BipartiteGraph(self.x_count, self.y_count, tuple(pairs))

    def contains(self, pairs: Iterable[Pair]) -> bool:
        own = set(self.edges)
        return all(tuple(pair) in own for pair in pairs)


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected simple graph on ``0..node_count-1``.

    Adjacency keeps the order in which edges were given so that searches
    scanning it are reproducible.
    """

    node_count: int
    edges: Tuple[Pair, ...] = field(default_factory=tuple)

    def __post_init__(self):
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidArgumentError(f"Loop at node {u}", 'BAD_GRAPH')
            if not (0 <= u < self.node_count and 0 <= v < self.node_count):
                raise InvalidArgumentError(f"Edge ({u}, {v}) is out of range", 'BAD_GRAPH')
            key = (min(u, v), max(u, v))
            if key in seen:
                raise InvalidArgumentError(f"Parallel edge {key}", 'BAD_GRAPH')
            seen.add(key)
        object.__setattr__(self, 'edges', tuple((int(u), int(v)) for u, v in self.edges))

    @cached_property
    def adjacency(self) -> Tuple[Tuple[int, ...], ...]:
        adj: List[List[int]] = [[] for _ in range(self.node_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(neighbors) for neighbors in adj)


def petersen_graph() -> SimpleGraph:
    """The Petersen graph: outer 5-cycle, inner pentagram, five spokes."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return SimpleGraph(10, tuple(outer + inner + spokes))
