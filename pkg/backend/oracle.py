"""Brute-force ground truth for Euler families, tours and matchings.

Nothing here shares code with the solvers: the Euler oracle enumerates, for
every edge, which two of its vertices a walk passes through it between, and
the matching oracle searches over node subsets directly.
"""

import sys
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Any, Dict, List, Optional, Sequence, Tuple

from limits import DEFAULT_LIMITS, SolverLimits
from errors import CapExceededError, InvalidArgumentError
from graphs import DisjointSet, SimpleGraph
from hypergraph import Hypergraph

MODES = ('family', 'tour', 'spanningTour')


@dataclass(frozen=True)
class OracleVerdict:
    """Exact answers; None marks a stronger notion the search stopped before settling."""

    family_exists: bool
    tour_exists: Optional[bool]
    spanning_tour_exists: Optional[bool]
    witness: Optional[Tuple[Tuple[int, int], ...]]
    search_size: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            'familyExists': self.family_exists,
            'tourExists': self.tour_exists,
            'spanningTourExists': self.spanning_tour_exists,
            'witness': None if self.witness is None else [list(pair) for pair in self.witness],
            'searchSize': self.search_size,
        }


def _is_connected(n: int, pairs: Sequence[Tuple[int, int]]) -> Tuple[bool, int]:
    """Connectivity of the chosen pairs on the vertices they use; also returns how many are used."""
    used = sorted({v for pair in pairs for v in pair})
    if not used:
        return False, 0
    dsu = DisjointSet(n)
    for a, b in pairs:
        dsu.union(a, b)
    root = dsu.find(used[0])
    return all(dsu.find(v) == root for v in used), len(used)


def oracle_euler(hypergraph: Hypergraph, mode: str = 'family',
                 limits: SolverLimits = DEFAULT_LIMITS) -> OracleVerdict:
    """
    Decide Euler family / tour / spanning tour existence by enumeration.

    Each assignment picks two vertices per edge; it gives a family when every
    vertex is picked an even number of times, a tour when the picked pairs
    are also connected, and a spanning tour when they use every vertex.

    Args:
        hypergraph: H
        mode: 'family', 'tour' or 'spanningTour'
        limits: ``oracle_state_cap`` bounds the product of C(|e|, 2)

    Returns:
        OracleVerdict
    """
    if mode not in MODES:
        raise InvalidArgumentError(f"Unknown oracle mode {mode!r}; expected one of {MODES}", 'BAD_MODE')

    states = prod(comb(len(edge), 2) for edge in hypergraph.edges)
    if states > limits.oracle_state_cap:
        raise CapExceededError('Euler oracle assignments', states, limits.oracle_state_cap)

    n = hypergraph.n
    options = [list(combinations(edge, 2)) for edge in hypergraph.edges]
    masks = [[(1 << a) | (1 << b) for a, b in choices] for choices in options]

    found = {'family': False, 'tour': False, 'spanningTour': False}
    witness = None
    explored = 0

    for picks in product(*(range(len(choices)) for choices in options)):
        explored += 1
        parity = 0
        for edge, pick in enumerate(picks):
            parity ^= masks[edge][pick]
        if parity:
            continue

        pairs = tuple(options[edge][pick] for edge, pick in enumerate(picks))
        found['family'] = True
        if hypergraph.m:
            connected, used = _is_connected(n, pairs)
            if connected:
                found['tour'] = True
                if used == n:
                    found['spanningTour'] = True
        if found[mode]:
            witness = pairs
            break

    exhausted = witness is None or explored == states
    strength = MODES.index(mode)

    def settle(name: str) -> Optional[bool]:
        if MODES.index(name) <= strength or exhausted or found[name]:
            return found[name]
        return None

    verdict = OracleVerdict(
        family_exists=found['family'],
        tour_exists=settle('tour'),
        spanning_tour_exists=settle('spanningTour'),
        witness=witness,
        search_size=explored,
    )
    print(f"[ORACLE] mode={mode} explored {explored}/{states} assignments",
          file=sys.stderr, flush=True)
    return verdict


def brute_matching(graph: SimpleGraph, limits: SolverLimits = DEFAULT_LIMITS) -> int:
    """
    Maximum matching size by exhaustive search over free-node sets.

    The lowest free node is either left exposed or matched to a free
    neighbor; results are memoized per free set.
    """
    if graph.node_count > limits.brute_matching_nodes:
        raise CapExceededError('brute-force matching (nodes)', graph.node_count,
                               limits.brute_matching_nodes)

    neighbor_masks: List[int] = [0] * graph.node_count
    for u, v in graph.edges:
        neighbor_masks[u] |= 1 << v
        neighbor_masks[v] |= 1 << u

    @lru_cache(maxsize=None)
    def best(free: int) -> int:
        if not free:
            return 0
        u = (free & -free).bit_length() - 1
        rest = free & ~(1 << u)
        result = best(rest)
        candidates = neighbor_masks[u] & rest
        while candidates and result < bin(free).count('1') // 2:
            v_bit = candidates & -candidates
            candidates ^= v_bit
            result = max(result, 1 + best(rest & ~v_bit))
        return result

    return best((1 << graph.node_count) - 1)
