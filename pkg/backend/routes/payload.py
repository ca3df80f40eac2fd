"""Request parsing and response helpers shared by the route blueprints."""

from typing import Any, Dict, Optional, Tuple

from flask import current_app, g, jsonify, request

from errors import CapExceededError, InvalidArgumentError
from limits import DEFAULT_LIMITS, SolverLimits
from euler_tours import EulerFamily, parse_walks
from hypergraph import Hypergraph, parse


def _json_body() -> Dict[str, Any]:
    if request.is_json:
        data = request.get_json(silent=True)
        if not isinstance(data, dict):
            raise InvalidArgumentError('Request body must be a JSON object', 'BAD_REQUEST')
        return data
    return {}


def read_hypergraph() -> Hypergraph:
    """
    Hypergraph from a text/plain body or the ``hypergraph`` field of a JSON body.

    Parsed once per request; instances above MAX_INCIDENCES are refused.
    """
    if 'hypergraph' in g:
        return g.hypergraph

    data = _json_body()
    text = data.get('hypergraph') if request.is_json else request.get_data(as_text=True)
    if not isinstance(text, str) or not text.strip():
        raise InvalidArgumentError('Hypergraph file content is required', 'MISSING_HYPERGRAPH')

    hypergraph = parse(text)
    cap = current_app.config['MAX_INCIDENCES']
    if hypergraph.incidence_size > cap:
        raise CapExceededError('instance size in incidences', hypergraph.incidence_size, cap)
    g.hypergraph = hypergraph
    return hypergraph


def request_units() -> int:
    """Solve-budget cost of the submitted hypergraph: one unit per started block of incidences."""
    per_unit = current_app.config['SOLVE_UNIT_INCIDENCES']
    return 1 + read_hypergraph().incidence_size // per_unit


def read_walks() -> EulerFamily:
    text = _json_body().get('walks')
    if not isinstance(text, str) or not text.strip():
        raise InvalidArgumentError('Walks in the tour file format are required', 'MISSING_WALKS')
    return parse_walks(text)


def flag(name: str, default: bool = False) -> bool:
    """Boolean from the JSON body or the query string."""
    value = _json_body().get(name, request.args.get(name))
    if value is None:
        return default
    if isinstance(value, bool):
        return value
    return str(value).lower() in ('1', 'true', 'yes')


def solver_limits() -> SolverLimits:
    return current_app.config.get('SOLVER_LIMITS', DEFAULT_LIMITS)


def negative(message: str, code: str, **extra: Any) -> Tuple[Any, int]:
    """Well-formed input with a negative answer."""
    body: Dict[str, Any] = {'success': False, 'error': message, 'code': code}
    body.update(extra)
    return jsonify(body), 422


def success(**fields: Any) -> Any:
    body: Dict[str, Optional[Any]] = {'success': True}
    body.update(fields)
    return jsonify(body)
