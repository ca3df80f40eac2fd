"""Route blueprints for the hypergraph Euler tour service."""

from .hypergraphs import hypergraphs_bp
from .tours import tours_bp
from .designs import designs_bp

__all__ = ['hypergraphs_bp', 'tours_bp', 'designs_bp']
