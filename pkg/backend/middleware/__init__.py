"""Middleware modules for the hypergraph Euler tour service."""

from .rate_limiter import (
    SolveBudget,
    solve_budget,
    metered
)

__all__ = [
    'SolveBudget',
    'solve_budget',
    'metered'
]
