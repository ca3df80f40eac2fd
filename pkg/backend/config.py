"""Configuration management for the hypergraph Euler tour service.

Only the HTTP service reads this module; the command line works from
``limits.SolverLimits`` and its own flags.
"""

import os
from typing import Dict, Optional

from dotenv import load_dotenv

from limits import DEFAULT_LIMITS, SolverLimits

# Load environment variables
load_dotenv()

# Environment variable -> SolverLimits field
LIMIT_SETTINGS: Dict[str, str] = {
    'HG_DEGREE_MAX_N': 'degree_max_n',
    'HG_DEGREE_MAX_T': 'degree_max_t',
    'HG_FLAG_SUBSET_CAP': 'flag_subset_cap',
    'HG_BARRIER_STATE_CAP': 'barrier_state_cap',
    'HG_NICE_TREE_EXHAUSTIVE': 'nice_tree_exhaustive',
    'HG_TREE_ATTEMPTS': 'tree_attempts',
    'HG_ORACLE_STATE_CAP': 'oracle_state_cap',
    'HG_BRUTE_MATCHING_NODES': 'brute_matching_nodes',
}


def env_int(name: str, default: int) -> int:
    """Integer environment variable; blank or unset gives ``default``."""
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


class Config:
    """Base configuration class."""

    # Flask
    SECRET_KEY = os.getenv('FLASK_SECRET_KEY', 'dev-secret-key-change-in-production')
    DEBUG = os.getenv('FLASK_DEBUG', 'False').lower() == 'true'
    MAX_CONTENT_LENGTH = env_int('MAX_UPLOAD_BYTES', 1024 * 1024)

    # Solve budget: units per client per minute, one unit per started
    # SOLVE_UNIT_INCIDENCES vertex-edge incidences of the instance
    RATE_LIMIT_PER_MINUTE = env_int('RATE_LIMIT_PER_MINUTE', 10)
    SOLVE_UNIT_INCIDENCES = env_int('SOLVE_UNIT_INCIDENCES', 2000)

    # Largest instance the service accepts, in incidences
    MAX_INCIDENCES = env_int('HG_MAX_INCIDENCES', 50000)

    # CORS
    FRONTEND_URL = os.getenv('FRONTEND_URL', 'http://localhost:3000')

    # Solver caps; None defers to the HG_* variable, then to SolverLimits()
    HG_DEGREE_MAX_N: Optional[int] = None
    HG_DEGREE_MAX_T: Optional[int] = None
    HG_FLAG_SUBSET_CAP: Optional[int] = None
    HG_BARRIER_STATE_CAP: Optional[int] = None
    HG_NICE_TREE_EXHAUSTIVE: Optional[int] = None
    HG_TREE_ATTEMPTS: Optional[int] = None
    HG_ORACLE_STATE_CAP: Optional[int] = None
    HG_BRUTE_MATCHING_NODES: Optional[int] = None

    @classmethod
    def solver_limits(cls) -> SolverLimits:
        """Solver caps as configured for the HTTP service, read on each call."""
        values = {}
        for setting, field in LIMIT_SETTINGS.items():
            override = getattr(cls, setting)
            default = getattr(DEFAULT_LIMITS, field)
            values[field] = override if override is not None else env_int(setting, default)
        return SolverLimits(**values)

    @classmethod
    def validate(cls):
        """Validate that the caps and budgets are usable."""
        limits = cls.solver_limits()
        bad = [setting for setting, field in LIMIT_SETTINGS.items() if getattr(limits, field) < 1]
        if bad:
            raise ValueError(f"Caps must be positive: {', '.join(bad)}")
        if cls.RATE_LIMIT_PER_MINUTE < 1:
            raise ValueError("RATE_LIMIT_PER_MINUTE must be positive")
        if cls.SOLVE_UNIT_INCIDENCES < 1 or cls.MAX_INCIDENCES < 1:
            raise ValueError("SOLVE_UNIT_INCIDENCES and HG_MAX_INCIDENCES must be positive")


class DevelopmentConfig(Config):
    """Development configuration."""
    DEBUG = True


class ProductionConfig(Config):
    """Production configuration."""
    DEBUG = False


def get_config():
    """Get configuration based on environment."""
    env = os.getenv('FLASK_ENV', 'development')
    if env == 'production':
        return ProductionConfig
    return DevelopmentConfig
