"""Formatting utilities for walks, u-cycles and JSON reports."""

import json
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from errors import ParseError
from utils.validators import sanitize_line, validate_walk_tokens


def format_walk(vertices: Sequence[int], edges: Sequence[int]) -> str:
    """
    Format one closed walk as "v1 e1 v2 e2 ... vt et".

    Args:
        vertices: Vertex ids v1..vt
        edges: Edge indices e1..et

    Returns:
        Single line without trailing newline
    """
    return ' '.join(f"{v} {e}" for v, e in zip(vertices, edges))


def format_walks(walks: Iterable[Any]) -> str:
    """One walk per line; each walk needs ``vertices`` and ``edges``."""
    lines = [format_walk(walk.vertices, walk.edges) for walk in walks]
    return '\n'.join(lines) + '\n' if lines else ''


def parse_walk_lines(text: str) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Parse the tour file format.

    Vertex ids sit at even positions, edge indices at odd positions; an edge
    index may carry an "e" prefix. Blank lines and '#' comments are skipped.

    Returns:
        List of (vertices, edges) tuples, one per walk line
    """
    walks = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = sanitize_line(raw)
        if not line:
            continue

        tokens = line.split()
        is_valid, error = validate_walk_tokens(tokens)
        if not is_valid:
            raise ParseError(error, 'MALFORMED_WALK', line_no)

        if any(token.startswith('e') for token in tokens[0::2]):
            raise ParseError('Vertex positions must hold plain ids', 'MALFORMED_WALK', line_no)

        vertices = tuple(int(token) for token in tokens[0::2])
        edges = tuple(int(token.lstrip('e')) for token in tokens[1::2])
        walks.append((vertices, edges))

    return walks


def format_junction(vertex: int, before: int, after: int) -> str:
    return f"{vertex}:{before},{after}"


def format_ucycle(junctions: Iterable[Any]) -> str:
    """Single line of "v:i,j" junctions (vertex, then the edge indices before and after it); each junction needs ``vertex``, ``before``, ``after``."""
    return ' '.join(format_junction(j.vertex, j.before, j.after) for j in junctions) + '\n'


def format_cycle(edges: Sequence[int]) -> str:
    """Cyclic list of edge indices on one line."""
    return ' '.join(str(e) for e in edges) + '\n'


def _json_default(value: Any) -> Any:
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    if hasattr(value, 'to_dict'):
        return value.to_dict()
    raise TypeError(f"Object of type {type(value).__name__} is not JSON serializable")


def format_report(report: Any) -> str:
    """Pretty JSON with stable key order."""
    return json.dumps(report, indent=2, sort_keys=True, default=_json_default) + '\n'
