"""Solver caps shared by the command line, the service and the tests."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SolverLimits:
    """Caps that keep the exhaustive searches at desk scale."""

    degree_max_n: int = 64
    degree_max_t: int = 4
    flag_subset_cap: int = 10 ** 6
    barrier_state_cap: int = 3 ** 12
    nice_tree_exhaustive: int = 24
    tree_attempts: int = 500
    oracle_state_cap: int = 10 ** 7
    brute_matching_nodes: int = 12

    def with_overrides(self, **overrides) -> 'SolverLimits':
        """Return a copy with the non-None overrides applied."""
        changes = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **changes) if changes else self


DEFAULT_LIMITS = SolverLimits()
