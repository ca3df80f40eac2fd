"""Exceptions shared by the solver modules, the CLI and the HTTP routes."""

from typing import Any, Dict, Optional


class HypergraphError(Exception):
    """Base exception carrying a machine-readable code next to the message."""

    code = 'HYPERGRAPH_ERROR'

    def __init__(self, message: str, code: str = None, details: Dict[str, Any] = None):
        self.message = message
        if code:
            self.code = code
        self.details = details or {}
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """JSON body used by the HTTP error handlers."""
        body = {
            'success': False,
            'error': self.message,
            'code': self.code,
        }
        if self.details:
            body['details'] = self.details
        return body


class ParseError(HypergraphError):
    """Malformed hypergraph or walk file."""

    code = 'PARSE_ERROR'

    def __init__(self, message: str, code: str = None, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message, code, {'line': line} if line is not None else None)


class CapExceededError(HypergraphError):
    """An exhaustive search would exceed its configured state cap."""

    code = 'CAP_EXCEEDED'

    def __init__(self, what: str, requested: int, cap: int):
        self.requested = requested
        self.cap = cap
        super().__init__(
            f"{what}: {requested} states exceed the cap of {cap}",
            details={'requested': requested, 'cap': cap},
        )


class InvalidArgumentError(HypergraphError):
    """A precondition of an operation does not hold."""

    code = 'INVALID_ARGUMENT'


class HypothesesViolatedError(HypergraphError):
    """Input falls outside the hypotheses the construction relies on."""

    code = 'HYPOTHESES_VIOLATED'


class InternalInvariantError(HypergraphError):
    """A theorem-guaranteed invariant failed; this is a bug."""

    code = 'INTERNAL_INVARIANT'
