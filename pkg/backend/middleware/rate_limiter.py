"""Per-client solve budget for the solver endpoints.

Every metered request is charged in units that grow with the size of the
submitted hypergraph, so one client cannot keep the matching and search
code busy by sending large instances back to back.
"""

import time
from collections import defaultdict, deque
from functools import wraps
from threading import Lock
from typing import Callable, Deque, Dict, Optional, Tuple

from flask import current_app, jsonify, request

Charge = Tuple[float, int]


class SolveBudget:
    """Sliding window of (timestamp, units) charges per client address."""

    def __init__(self, units_per_minute: Optional[int] = None, window_size: int = 60):
        # None reads RATE_LIMIT_PER_MINUTE from the running app
        self.units_per_minute = units_per_minute
        self.window_size = window_size
        self.charges: Dict[str, Deque[Charge]] = defaultdict(deque)
        self.lock = Lock()

    @property
    def capacity(self) -> int:
        if self.units_per_minute is not None:
            return self.units_per_minute
        return current_app.config['RATE_LIMIT_PER_MINUTE']

    @staticmethod
    def client_id() -> str:
        forwarded = request.headers.get('X-Forwarded-For')
        if forwarded:
            return forwarded.split(',')[0].strip()
        return request.remote_addr or 'unknown'

    def _live(self, client: str, now: float) -> Deque[Charge]:
        window = self.charges[client]
        while window and window[0][0] <= now - self.window_size:
            window.popleft()
        return window

    def charge(self, units: int) -> bool:
        """
        Spend ``units`` for the current client.

        A client with nothing in the window may always run one request, so
        instances costing more than the whole budget are not locked out.

        Returns:
            True if the request may run
        """
        now = time.time()
        with self.lock:
            window = self._live(self.client_id(), now)
            spent = sum(cost for _, cost in window)
            if window and spent + units > self.capacity:
                return False
            window.append((now, units))
            return True

    def remaining(self) -> int:
        with self.lock:
            window = self._live(self.client_id(), time.time())
            return max(0, self.capacity - sum(cost for _, cost in window))

    def retry_after(self) -> int:
        """Seconds until the oldest charge leaves the window."""
        now = time.time()
        with self.lock:
            window = self._live(self.client_id(), now)
            if not window:
                return 0
            return max(0, int(window[0][0] + self.window_size - now))

    def reset(self):
        with self.lock:
            self.charges.clear()


# Shared by every metered route
solve_budget = SolveBudget()


def metered(units: Callable[[], int], budget: Optional[SolveBudget] = None):
    """
    Charge each request ``units()`` against the client's solve budget.

    Args:
        units: Cost of the current request; may raise to reject bad input
        budget: SolveBudget to charge (defaults to solve_budget)
    """
    budget = budget or solve_budget

    def decorator(f):
        @wraps(f)
        def decorated_function(*args, **kwargs):
            cost = units()
            if not budget.charge(cost):
                return jsonify({
                    'success': False,
                    'error': f"Solve budget exhausted ({cost} units requested). Please try again later.",
                    'code': 'RATE_LIMITED',
                    'retryAfter': budget.retry_after()
                }), 429

            response = f(*args, **kwargs)

            target = response[0] if isinstance(response, tuple) else response
            if hasattr(target, 'headers'):
                target.headers['X-Solve-Units'] = str(cost)
                target.headers['X-RateLimit-Remaining'] = str(budget.remaining())
                target.headers['X-RateLimit-Reset'] = str(budget.retry_after())

            return response

        return decorated_function

    return decorator
