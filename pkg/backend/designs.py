"""Generators and a validator for the block designs used as tour inputs.

Points are ``0..v-1`` and blocks are hypergraph edges, so every generator
returns a Hypergraph that serializes straight to the hypergraph file
format.
"""

from dataclasses import dataclass
from itertools import combinations
from typing import FrozenSet, Iterable, List, Tuple

from limits import DEFAULT_LIMITS, SolverLimits
from errors import InvalidArgumentError
from hypergraph import Hypergraph, t_degrees

FANO_BLOCKS = (
    (0, 1, 3), (1, 2, 4), (2, 3, 5), (3, 4, 6), (4, 5, 0), (5, 6, 1), (6, 0, 2),
)

# 2^7 points already give 85344 blocks
MAX_BOOLEAN_DIMENSION = 7


@dataclass(frozen=True)
class DesignSpec:
    """t-(v,K,lambda): every t-subset of the v points lies in exactly lambda blocks, block sizes in K."""

    t: int
    v: int
    k: FrozenSet[int]
    lam: int = 1

    def __post_init__(self):
        object.__setattr__(self, 'k', frozenset(self.k))
        if not self.k:
            raise InvalidArgumentError('Block size set K is empty', 'BAD_DESIGN')
        if not (0 <= self.t <= min(self.k) <= max(self.k) <= self.v):
            raise InvalidArgumentError(
                f"Need t <= min K <= max K <= v, got t={self.t}, K={sorted(self.k)}, v={self.v}",
                'BAD_DESIGN',
            )
        if self.lam < 1:
            raise InvalidArgumentError(f"lambda must be at least 1, got {self.lam}", 'BAD_DESIGN')

    @classmethod
    def uniform(cls, t: int, v: int, k: int, lam: int = 1) -> 'DesignSpec':
        return cls(t, v, frozenset({k}), lam)


def _bose(n: int) -> List[Tuple[int, ...]]:
    """Bose construction for n = 6t+3 over Z_{2t+1} x Z_3."""
    order = n // 3
    half = (order + 1) // 2  # inverse of 2 mod order

    def point(x: int, i: int) -> int:
        return x + (i % 3) * order

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(order)]
    for i in range(3):
        for x, y in combinations(range(order), 2):
            blocks.append((point(x, i), point(y, i), point((x + y) * half % order, i + 1)))
    return blocks


def _skolem(n: int) -> List[Tuple[int, ...]]:
    """Skolem construction for n = 6t+1 over (Z_{2t} x Z_3) plus a point at infinity."""
    t = (n - 1) // 6
    order = 2 * t
    infinity = n - 1

    def point(x: int, i: int) -> int:
        return x + (i % 3) * order

    def product(x: int, y: int) -> int:
        s = (x + y) % order
        return s // 2 if s % 2 == 0 else t + (s - 1) // 2

    blocks = [(point(x, 0), point(x, 1), point(x, 2)) for x in range(t)]
    for i in range(3):
        for x in range(t):
            blocks.append((infinity, point(x + t, i), point(x, i + 1)))
    for i in range(3):
        for x, y in combinations(range(order), 2):
            blocks.append((point(x, i), point(y, i), point(product(x, y), i + 1)))
    return blocks


def gen_sts(n: int) -> Hypergraph:
    """
    Steiner triple system of order n.

    Args:
        n: Order, n = 1 or 3 (mod 6) and n >= 7

    Returns:
        Hypergraph with n(n-1)/6 triples; the Fano plane for n = 7
    """
    if n < 7 or n % 6 not in (1, 3):
        raise InvalidArgumentError(
            f"STS(n) needs n = 1 or 3 (mod 6) and n >= 7, got {n}",
            'BAD_DESIGN_ORDER',
            {'n': n},
        )
    if n == 7:
        blocks = list(FANO_BLOCKS)
    elif n % 6 == 3:
        blocks = _bose(n)
    else:
        blocks = _skolem(n)
    return Hypergraph(n, tuple(blocks))


def gen_boolean_sqs(m: int) -> Hypergraph:
    """Planes of the binary affine space of dimension m: a 3-(2^m, 4, 1) design."""
    if not (3 <= m <= MAX_BOOLEAN_DIMENSION):
        raise InvalidArgumentError(
            f"Dimension must be in 3..{MAX_BOOLEAN_DIMENSION}, got {m}",
            'BAD_DESIGN_ORDER',
            {'m': m},
        )
    v = 2 ** m
    blocks = []
    for a, b, c in combinations(range(v), 3):
        d = a ^ b ^ c
        if d > c:
            blocks.append((a, b, c, d))
    return Hypergraph(v, tuple(blocks))


def gen_sqs8() -> Hypergraph:
    """The unique SQS(8): 14 blocks."""
    return gen_boolean_sqs(3)


def scale(hypergraph: Hypergraph, lam: int) -> Hypergraph:
    """Repeat every edge lam times, copies kept next to each other."""
    if lam < 1:
        raise InvalidArgumentError(f"lambda must be at least 1, got {lam}", 'BAD_MULTIPLIER')
    return Hypergraph(hypergraph.n, tuple(edge for edge in hypergraph.edges for _ in range(lam)))


def validate_design(hypergraph: Hypergraph, spec: DesignSpec,
                    limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    """True iff H has v points, block sizes in K and delta_t = Delta_t = lambda."""
    if hypergraph.n != spec.v:
        return False
    if any(len(edge) not in spec.k for edge in hypergraph.edges):
        return False
    low, high = t_degrees(hypergraph, spec.t, limits)
    return low == high == spec.lam


def block_sizes(hypergraph: Hypergraph) -> FrozenSet[int]:
    return frozenset(len(edge) for edge in hypergraph.edges)


def comments_for(name: str, hypergraph: Hypergraph, extra: Iterable[str] = ()) -> List[str]:
    """Header comments written above generated designs."""
    lines = [f"{name}: n={hypergraph.n} m={hypergraph.m} K={sorted(block_sizes(hypergraph))}"]
    lines.extend(extra)
    return lines
