"""Input validation utilities for hypergraph and walk files."""

import re
from typing import List, Optional, Sequence, Tuple

# Non-negative decimal integer
INT_PATTERN = re.compile(r'^\d+$')

# Walk tokens: plain ids, optionally prefixed with "e" for edge positions
WALK_TOKEN_PATTERN = re.compile(r'^e?\d+$')


def sanitize_line(value: str) -> str:
    """
    Sanitize one line of file input.

    Args:
        value: The raw line

    Returns:
        The line without null bytes and surrounding whitespace, or "" for comments
    """
    if not value:
        return ""

    value = value.replace('\x00', '').strip()

    if value.startswith('#'):
        return ""

    return value


def validate_vertex_count(token: str) -> Tuple[bool, Optional[str]]:
    """
    Validate the header line holding the vertex count.

    Args:
        token: The header line

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not token:
        return False, "Vertex count is required"

    parts = token.split()
    if len(parts) != 1:
        return False, f"Header must hold a single vertex count, got {token!r}"

    if not INT_PATTERN.match(parts[0]):
        return False, f"Vertex count must be a non-negative integer, got {parts[0]!r}"

    return True, None


def validate_edge_tokens(tokens: Sequence[str]) -> Tuple[bool, Optional[str]]:
    """
    Validate that an edge line is a non-empty list of integers.

    Args:
        tokens: Whitespace-separated tokens of the line

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not tokens:
        return False, "Edge is empty"

    for token in tokens:
        if not INT_PATTERN.match(token):
            return False, f"Vertex id must be a non-negative integer, got {token!r}"

    return True, None


def validate_vertex_range(vertices: Sequence[int], n: int) -> Tuple[bool, Optional[str]]:
    """
    Validate that every vertex id lies in 0..n-1.

    Args:
        vertices: Vertex ids of one edge
        n: Vertex count from the header

    Returns:
        Tuple of (is_valid, error_message)
    """
    for v in vertices:
        if v < 0 or v >= n:
            return False, f"Vertex {v} is out of range 0..{n - 1}"

    return True, None


def validate_distinct(vertices: Sequence[int]) -> Tuple[bool, Optional[str]]:
    """
    Validate that an edge does not repeat a vertex.

    Args:
        vertices: Vertex ids of one edge

    Returns:
        Tuple of (is_valid, error_message)
    """
    seen = set()
    for v in vertices:
        if v in seen:
            return False, f"Vertex {v} is repeated within the edge"
        seen.add(v)

    return True, None


def validate_walk_tokens(tokens: List[str]) -> Tuple[bool, Optional[str]]:
    """
    Validate one line of a tour file: alternating vertex and edge ids.

    Args:
        tokens: Whitespace-separated tokens of the line

    Returns:
        Tuple of (is_valid, error_message)
    """
    if not tokens:
        return False, "Walk is empty"

    if len(tokens) % 2:
        return False, f"Walk must alternate vertices and edges, got {len(tokens)} tokens"

    for token in tokens:
        if not WALK_TOKEN_PATTERN.match(token):
            return False, f"Walk token must be a non-negative integer, got {token!r}"

    return True, None
