"""Numeric thresholds and degree predicates for hypergraph tours.

Covers the admissibility threshold g(c, k, mu), the t-degree ratio bound,
the two threshold inequalities behind the admissibility cases, and the
hypothesis report used by ``check``.
"""

from fractions import Fraction
from math import ceil, comb
from typing import Any, Dict, Optional, Union

from limits import DEFAULT_LIMITS, SolverLimits
from errors import CapExceededError, InvalidArgumentError

Number = Union[int, Fraction]


def _normalize(value: Fraction) -> Number:
    return int(value) if value.denominator == 1 else value


def middle_threshold(c: int, k: int) -> Fraction:
    """(4c^2 + k^2 - 3k + 2) / (4c - 2k + 2), defined for k <= 2c."""
    return Fraction(4 * c * c + k * k - 3 * k + 2, 4 * c - 2 * k + 2)


def large_rank_threshold(c: int, k: int, mu: int) -> int:
    """2 mu (k-1)(2^(k-c-1) - 2^c + 1) + C(k, 2) + 1, used when k > 2c."""
    return 2 * mu * (k - 1) * (2 ** (k - c - 1) - 2 ** c + 1) + comb(k, 2) + 1


def admissible_threshold(c: int, k: int, mu: int) -> Number:
    """
    Minimum order g(c, k, mu) of an (n, c, k, mu)-admissible hypergraph.

    Args:
        c: corank
        k: rank
        mu: maximum edge multiplicity

    Returns:
        int when the value is integral, Fraction otherwise
    """
    if mu < 1 or c < 3 or k < c:
        raise InvalidArgumentError(
            f"g(c,k,mu) is not defined for (c,k,mu)=({c},{k},{mu})",
            'UNCOVERED_PARAMETERS',
            {'c': c, 'k': k, 'mu': mu},
        )
    if (c, k) == (3, 3):
        return 7
    if (c, k) == (3, 4):
        return 10
    if c >= 4 and k <= 2 * c - 2:
        return comb(k, 2) + 1
    if 2 * c - 1 <= k <= 2 * c:
        return _normalize(middle_threshold(c, k))
    if k > 2 * c:
        return large_rank_threshold(c, k, mu)
    raise InvalidArgumentError(
        f"g(c,k,mu) is not defined for (c,k,mu)=({c},{k},{mu})",
        'UNCOVERED_PARAMETERS',
        {'c': c, 'k': k, 'mu': mu},
    )


def threshold_identity_holds(c: int, k: int) -> bool:
    """
    max{C(k,2)+1, middle(c,k)} picks the branch the admissibility cases use.

    Returns False only on an arithmetic bug; raises for (c, k) outside
    4 <= c <= k <= 2c-2 and c >= 3, 2c-1 <= k <= 2c.
    """
    small = Fraction(comb(k, 2) + 1)
    if 4 <= c <= k <= 2 * c - 2:
        return max(small, middle_threshold(c, k)) == small
    if c >= 3 and 2 * c - 1 <= k <= 2 * c:
        middle = middle_threshold(c, k)
        return max(small, middle) == middle
    raise InvalidArgumentError(f"No identity case for (c,k)=({c},{k})", 'UNCOVERED_PARAMETERS')


def threshold_dominates(c: int, k: int, mu: int) -> bool:
    """For mu >= 1, c >= 3, k >= 2c+1 the large-rank threshold dominates."""
    if mu < 1 or c < 3 or k < 2 * c + 1:
        raise InvalidArgumentError(
            f"Domination needs mu>=1, c>=3, k>=2c+1, got ({c},{k},{mu})",
            'UNCOVERED_PARAMETERS',
        )
    rhs = Fraction(4 * c * c + 5 * k * k - 8 * c * k - 3 * k + 2, 2 * k - 4 * c + 2)
    return large_rank_threshold(c, k, mu) >= rhs


def degree_ratio_holds(hypergraph, i: int, j: int,
                       limits: SolverLimits = DEFAULT_LIMITS) -> bool:
    """
    delta_i / delta_j >= C(n-i, j-i) / C(k-i, j-i) for 0 <= i <= j <= rank.

    This is a theorem; False means a bug in the degree counting.
    """
    from hypergraph import t_degrees

    k = hypergraph.rank
    n = hypergraph.n
    if not (0 <= i <= j <= k):
        raise InvalidArgumentError(f"Need 0 <= i <= j <= rank={k}, got i={i}, j={j}", 'T_OUT_OF_RANGE')

    delta_i, _ = t_degrees(hypergraph, i, limits)
    delta_j, _ = t_degrees(hypergraph, j, limits)
    if delta_j == 0:
        raise InvalidArgumentError(f"delta_{j} is 0, ratio undefined", 'RATIO_UNDEFINED')

    # Cross-multiplied to stay in integers.
    return delta_i * comb(k - i, j - i) >= delta_j * comb(n - i, j - i)


def nice_tree_order_bound(c: int, k: int, mu: int) -> int:
    """Order mu (k-1)(2^(k-c-1) - 2^c + 1) above which a nice tree is guaranteed, floored at 0."""
    bound = mu * (k - 1) * (Fraction(2) ** (k - c - 1) - 2 ** c + 1)
    return max(0, ceil(bound))


def _safe_min_degree(hypergraph, t: int, limits: SolverLimits) -> Optional[int]:
    from hypergraph import t_degrees

    if t > hypergraph.rank or t > hypergraph.n:
        return 0
    try:
        return t_degrees(hypergraph, t, limits)[0]
    except CapExceededError:
        return None


def is_admissible(hypergraph) -> bool:
    """c >= 3 and n >= g(c, k, mu)."""
    c, k, mu = hypergraph.corank, hypergraph.rank, hypergraph.max_multiplicity
    if hypergraph.m == 0 or c < 3:
        return False
    return hypergraph.n >= admissible_threshold(c, k, mu)


def tour_hypotheses(hypergraph, limits: SolverLimits = DEFAULT_LIMITS) -> Dict[str, Any]:
    """
    Which spanning-tour degree conditions hold.

    Conditions: (i) delta_2 >= k; (ii) delta_3 >= 1 and n >= k^2-3k+5;
    (iii) delta_r >= 1 for some 4 <= r <= k, equivalent to k >= 4 and
    delta_4 >= 1 because t-degrees do not increase with t. None marks a
    condition whose degree count hit the enumeration cap.
    """
    n, c, k, mu = hypergraph.n, hypergraph.corank, hypergraph.rank, hypergraph.max_multiplicity

    threshold: Optional[Number] = None
    if hypergraph.m and c >= 3:
        threshold = admissible_threshold(c, k, mu)
    admissible = threshold is not None and n >= threshold

    delta2 = _safe_min_degree(hypergraph, 2, limits) if k >= 2 else 0
    delta3 = _safe_min_degree(hypergraph, 3, limits) if k >= 3 else 0
    delta4 = _safe_min_degree(hypergraph, 4, limits) if k >= 4 else 0

    cond_i = None if delta2 is None else delta2 >= k
    cond_ii = None if delta3 is None else (delta3 >= 1 and n >= k * k - 3 * k + 5)
    cond_iii = None if delta4 is None else (k >= 4 and delta4 >= 1)

    holding = [name for name, value in (('i', cond_i), ('ii', cond_ii), ('iii', cond_iii)) if value]

    return {
        'corank': c,
        'rank': k,
        'maxMultiplicity': mu,
        'threshold': None if threshold is None else str(threshold),
        'admissible': admissible,
        'delta2': delta2,
        'delta3': delta3,
        'delta4': delta4,
        'conditions': {'i': cond_i, 'ii': cond_ii, 'iii': cond_iii},
        'spanningTourGuaranteed': admissible and bool(holding),
        'applies': holding if admissible else [],
    }


def family_hypothesis(hypergraph, limits: SolverLimits = DEFAULT_LIMITS) -> Dict[str, Any]:
    """Corank >= 3 and (1 + ceil(k/c))-flag-connected guarantees an Euler family."""
    from hypergraph import is_flag_connected

    c, k = hypergraph.corank, hypergraph.rank
    if hypergraph.m == 0 or c < 3:
        return {'required': None, 'flagConnected': None, 'familyGuaranteed': False}

    required = 1 + ceil(k / c)
    try:
        connected: Optional[bool] = is_flag_connected(hypergraph, required, limits)
    except CapExceededError:
        connected = None

    return {
        'required': required,
        'flagConnected': connected,
        'familyGuaranteed': bool(connected),
    }


def nice_tree_hypothesis(hypergraph, limits: SolverLimits = DEFAULT_LIMITS) -> Dict[str, Any]:
    """delta_2 >= k and n >= mu(k-1)(2^(k-c-1) - 2^c + 1) guarantee a nice spanning tree."""
    c, k, mu = hypergraph.corank, hypergraph.rank, hypergraph.max_multiplicity
    if hypergraph.m == 0 or c < 3:
        return {'orderBound': None, 'niceTreeGuaranteed': False}

    delta2 = _safe_min_degree(hypergraph, 2, limits)
    bound = nice_tree_order_bound(c, k, mu)
    return {
        'orderBound': bound,
        'niceTreeGuaranteed': delta2 is not None and delta2 >= k and hypergraph.n >= bound,
    }


def check_report(hypergraph, limits: SolverLimits = DEFAULT_LIMITS) -> Dict[str, Any]:
    """Everything ``check`` reports: profile, hypotheses, strong cut edges, flag parity."""
    from hypergraph import flag_spanning_tour_exists, profile, strong_cut_edges

    n, rank = hypergraph.n, hypergraph.rank
    t_list = [] if n > limits.degree_max_n else list(range(1, min(rank, n, limits.degree_max_t) + 1))
    return {
        'profile': profile(hypergraph, t_list, limits).to_dict(),
        'hypotheses': tour_hypotheses(hypergraph, limits),
        'family': family_hypothesis(hypergraph, limits),
        'niceTree': nice_tree_hypothesis(hypergraph, limits),
        'strongCutEdges': strong_cut_edges(hypergraph),
        'flagSpanningTourExists': flag_spanning_tour_exists(hypergraph),
    }
