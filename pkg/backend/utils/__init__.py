"""Utility modules for the hypergraph Euler tour toolkit."""

from .validators import (
    sanitize_line,
    validate_vertex_count,
    validate_edge_tokens,
    validate_vertex_range,
    validate_distinct,
    validate_walk_tokens
)

__all__ = [
    'sanitize_line',
    'validate_vertex_count',
    'validate_edge_tokens',
    'validate_vertex_range',
    'validate_distinct',
    'validate_walk_tokens'
]
