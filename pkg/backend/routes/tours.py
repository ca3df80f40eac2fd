"""Euler family and tour routes."""

from flask import Blueprint, jsonify

from errors import InvalidArgumentError
from euler_tours import (
    emit_ucycle,
    euler_family,
    euler_tour,
    line_graph_hamiltonian_cycle,
    run_spanning_pipeline,
    verify,
)
from hypergraph import Hypergraph
from middleware import metered
from routes.payload import (
    flag,
    negative,
    read_hypergraph,
    read_walks,
    request_units,
    solver_limits,
    success,
)
from utils.formatters import format_walk, format_walks

tours_bp = Blueprint('tours', __name__)


def _walk_dict(walk):
    return {
        'vertices': list(walk.vertices),
        'edges': list(walk.edges),
        'text': format_walk(walk.vertices, walk.edges),
    }


def _verified_tour(hypergraph: Hypergraph):
    family = read_walks()
    report = verify(hypergraph, family, require_tour=True, provenance='request')
    if not report.ok:
        raise InvalidArgumentError('Walks are not an Euler tour', 'INVALID_TOUR',
                                   {'violations': report.violations})
    return family.walks[0]


@tours_bp.route('/family', methods=['POST'])
@metered(request_units)
def family():
    """Euler family from the even (E,2)-regular subgraph search."""
    hypergraph = read_hypergraph()
    found = euler_family(hypergraph)
    if found is None:
        return negative('No Euler family exists', 'NO_FAMILY')
    return success(walks=[_walk_dict(walk) for walk in found.walks],
                   text=format_walks(found.walks))


@tours_bp.route('/tour', methods=['POST'])
@metered(request_units)
def tour():
    """Euler tour; ?spanning=1 runs the spanning pipeline and reports the failing stage."""
    hypergraph = read_hypergraph()
    limits = solver_limits()

    if flag('spanning'):
        outcome = run_spanning_pipeline(hypergraph, limits)
        if outcome.walk is None:
            if outcome.capped:
                return jsonify({
                    'success': False,
                    'error': outcome.reason,
                    'code': 'CAP_EXCEEDED',
                    'stage': outcome.stage,
                }), 400
            return negative('No spanning Euler tour found', 'NO_TOUR', stage=outcome.stage,
                            reason=outcome.reason)
        return success(walk=_walk_dict(outcome.walk), spanning=True)

    walk = euler_tour(hypergraph, limits)
    if walk is None:
        return negative('No Euler tour found', 'NO_TOUR')
    return success(walk=_walk_dict(walk), spanning=False)


@tours_bp.route('/verify', methods=['POST'])
def verify_walks():
    """
    Check walks against a hypergraph.

    Body: {"hypergraph": "...", "walks": "...", "spanning": bool, "tour": bool}
    """
    hypergraph = read_hypergraph()
    report = verify(hypergraph, read_walks(), flag('spanning'), flag('tour'), provenance='request')
    if not report.ok:
        return negative('Walks failed verification', 'INVALID_WALKS', report=report.to_dict())
    return success(report=report.to_dict())


@tours_bp.route('/bicg', methods=['POST'])
def bicg():
    """Hamiltonian cycle of the block-intersection graph from a tour."""
    hypergraph = read_hypergraph()
    cycle = line_graph_hamiltonian_cycle(hypergraph, _verified_tour(hypergraph))
    return success(cycle=cycle)


@tours_bp.route('/ucycle', methods=['POST'])
def ucycle():
    """Rank-two universal cycle junctions of a tour."""
    hypergraph = read_hypergraph()
    junctions = emit_ucycle(_verified_tour(hypergraph))
    return success(junctions=[
        {'vertex': j.vertex, 'before': j.before, 'after': j.after}
        for j in junctions
    ])
