"""Hypergraph analysis routes: profile report, barrier search, oracle."""

from flask import Blueprint, request

from errors import InvalidArgumentError
from hypergraph import incidence
from middleware import metered
from oracle import MODES, oracle_euler
from parity_factor import find_barrier_brute_force
from routes.payload import negative, read_hypergraph, request_units, solver_limits, success
from utils.thresholds import check_report

hypergraphs_bp = Blueprint('hypergraphs', __name__)


@hypergraphs_bp.route('/check', methods=['POST'])
def check():
    """
    Profile, admissibility threshold and theorem hypotheses.

    Body: hypergraph file (text/plain) or {"hypergraph": "..."}
    """
    return success(**check_report(read_hypergraph(), solver_limits()))


@hypergraphs_bp.route('/barrier', methods=['POST'])
@metered(request_units)
def barrier():
    """Minimum barrier of the incidence graph, or null when none exists."""
    hypergraph = read_hypergraph()
    found = find_barrier_brute_force(incidence(hypergraph), solver_limits())
    if found is None:
        return success(barrier=None)
    return negative('Incidence graph has a barrier; no Euler family exists', 'BARRIER_FOUND',
                    barrier=found.to_dict())


@hypergraphs_bp.route('/oracle', methods=['POST'])
@metered(request_units)
def oracle():
    """Exhaustive existence check; ?mode=family|tour|spanningTour."""
    mode = request.args.get('mode', 'family')
    if mode not in MODES:
        raise InvalidArgumentError(f"mode must be one of {', '.join(MODES)}", 'BAD_MODE')

    verdict = oracle_euler(read_hypergraph(), mode, solver_limits())
    return success(verdict=verdict.to_dict())
