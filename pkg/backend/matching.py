"""Maximum-cardinality matching in general graphs (Edmonds' blossom search).

Each exposed root gets one breadth-first search for an augmenting path;
odd cycles met on the way are shrunk by relabelling the reached nodes with a
common base. Nodes and neighbours are scanned in index / adjacency order,
so the result is a function of the input graph alone.
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Sequence, Set, Tuple

from graphs import SimpleGraph

UNMATCHED = -1


@dataclass(frozen=True)
class Matching:
    """A set of disjoint edges, stored as sorted (u, v) pairs with u < v."""

    node_count: int
    pairs: Tuple[Tuple[int, int], ...]

    @property
    def size(self) -> int:
        return len(self.pairs)

    def is_perfect(self) -> bool:
        return 2 * self.size == self.node_count

    def mate_of(self) -> List[int]:
        mate = [UNMATCHED] * self.node_count
        for u, v in self.pairs:
            mate[u] = v
            mate[v] = u
        return mate

    @classmethod
    def from_mate(cls, mate: Sequence[int]) -> 'Matching':
        pairs = tuple((u, v) for u, v in enumerate(mate) if v != UNMATCHED and u < v)
        return cls(len(mate), pairs)


def _greedy_start(adj: Sequence[Sequence[int]], mate: List[int]) -> None:
    for u in range(len(adj)):
        if mate[u] != UNMATCHED:
            continue
        for v in adj[u]:
            if mate[v] == UNMATCHED:
                mate[u] = v
                mate[v] = u
                break


def _lowest_common_base(a: int, b: int, base: List[int], mate: List[int], parent: List[int]) -> int:
    seen: Set[int] = set()
    while True:
        a = base[a]
        seen.add(a)
        if mate[a] == UNMATCHED:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if b in seen:
            return b
        b = parent[mate[b]]


def _mark_blossom_path(v: int, blossom_base: int, child: int, base: List[int], mate: List[int],
                       parent: List[int], in_blossom: Set[int]) -> None:
    while base[v] != blossom_base:
        in_blossom.add(base[v])
        in_blossom.add(base[mate[v]])
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


def _find_augmenting_path(root: int, adj: Sequence[Sequence[int]], mate: List[int],
                          parent: List[int], base: List[int]) -> Tuple[int, List[int]]:
    """
    Search from ``root``.

    ``parent`` and ``base`` are shared across searches: every entry is
    UNMATCHED / the identity on entry, and only nodes the search reaches are
    touched, so one search costs time in the size of its tree.

    Returns:
        (exposed endpoint or -1, reached nodes whose ``parent`` the caller clears)
    """
    reached = [root]
    in_tree = {root}
    queue = deque([root])
    end = UNMATCHED

    while queue and end == UNMATCHED:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != UNMATCHED and parent[mate[to]] != UNMATCHED):
                # Odd cycle: shrink it onto its base.
                blossom_base = _lowest_common_base(v, to, base, mate, parent)
                in_blossom: Set[int] = set()
                _mark_blossom_path(v, blossom_base, to, base, mate, parent, in_blossom)
                _mark_blossom_path(to, blossom_base, v, base, mate, parent, in_blossom)
                for node in reached:
                    if base[node] in in_blossom:
                        base[node] = blossom_base
                        if node not in in_tree:
                            in_tree.add(node)
                            queue.append(node)
            elif parent[to] == UNMATCHED:
                parent[to] = v
                reached.append(to)
                if mate[to] == UNMATCHED:
                    end = to
                    break
                in_tree.add(mate[to])
                reached.append(mate[to])
                queue.append(mate[to])

    # Bases only ever point at reached nodes.
    for node in reached:
        base[node] = node
    return end, reached


def _augment(end: int, mate: List[int], parent: List[int]) -> None:
    v = end
    while v != UNMATCHED:
        pv = parent[v]
        next_v = mate[pv]
        mate[v] = pv
        mate[pv] = v
        v = next_v


def _solve(graph: SimpleGraph, stop_on_exposed: bool) -> Optional[List[int]]:
    adj = graph.adjacency
    n = graph.node_count
    mate = [UNMATCHED] * n
    parent = [UNMATCHED] * n
    base = list(range(n))
    _greedy_start(adj, mate)

    for root in range(n):
        if mate[root] != UNMATCHED:
            continue
        end, reached = _find_augmenting_path(root, adj, mate, parent, base)
        if end != UNMATCHED:
            _augment(end, mate, parent)
        for node in reached:
            parent[node] = UNMATCHED
        if end == UNMATCHED and stop_on_exposed:
            # A root without an augmenting path stays exposed in every
            # maximum matching grown from here.
            return None
    return mate


def max_matching(graph: SimpleGraph) -> Matching:
    """
    Maximum-cardinality matching.

    Args:
        graph: Simple undirected graph

    Returns:
        Matching of maximum size; deterministic for a given edge order
    """
    return Matching.from_mate(_solve(graph, stop_on_exposed=False))


def perfect_matching(graph: SimpleGraph) -> Optional[Matching]:
    """Perfect matching, or None as soon as some node is shown to stay exposed."""
    if graph.node_count % 2:
        return None
    mate = _solve(graph, stop_on_exposed=True)
    if mate is None:
        return None
    return Matching.from_mate(mate)
