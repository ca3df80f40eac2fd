"""Design generator routes; responses carry the hypergraph file text."""

from flask import Blueprint

from designs import comments_for, gen_boolean_sqs, gen_sqs8, gen_sts
from hypergraph import Hypergraph, format_hypergraph
from routes.payload import success

designs_bp = Blueprint('designs', __name__)


def _design_response(name: str, hypergraph: Hypergraph):
    return success(
        name=name,
        n=hypergraph.n,
        m=hypergraph.m,
        hypergraph=format_hypergraph(hypergraph, comments_for(name, hypergraph)),
    )


@designs_bp.route('/sts/<int:n>', methods=['GET'])
def sts(n):
    return _design_response(f"STS({n})", gen_sts(n))


@designs_bp.route('/sqs8', methods=['GET'])
def sqs8():
    return _design_response('SQS(8)', gen_sqs8())


@designs_bp.route('/boolean-sqs/<int:m>', methods=['GET'])
def boolean_sqs(m):
    hypergraph = gen_boolean_sqs(m)
    return _design_response(f"SQS({hypergraph.n})", hypergraph)
