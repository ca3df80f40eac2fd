import os
import subprocess
import sys

import pytest

from config import LIMIT_SETTINGS, Config, get_config
from limits import DEFAULT_LIMITS, SolverLimits
from utils.batch import BatchResult, combined_exit_code

BACKEND = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@pytest.fixture
def clean_env(monkeypatch):
    for setting in LIMIT_SETTINGS:
        monkeypatch.delenv(setting, raising=False)
    return monkeypatch


def test_overrides_skip_none():
    limits = DEFAULT_LIMITS.with_overrides(barrier_state_cap=9, oracle_state_cap=None)
    assert limits.barrier_state_cap == 9
    assert limits.oracle_state_cap == DEFAULT_LIMITS.oracle_state_cap
    assert DEFAULT_LIMITS.with_overrides() is DEFAULT_LIMITS


def test_service_limits_follow_config(clean_env):
    class Small(Config):
        HG_TREE_ATTEMPTS = 3

    assert Small.solver_limits().tree_attempts == 3
    assert Config.solver_limits() == SolverLimits()


def test_service_limits_read_environment_on_call(clean_env):
    clean_env.setenv('HG_TREE_ATTEMPTS', '7')
    clean_env.setenv('HG_ORACLE_STATE_CAP', ' ')
    limits = Config.solver_limits()
    assert limits.tree_attempts == 7
    assert limits.oracle_state_cap == DEFAULT_LIMITS.oracle_state_cap


def test_malformed_variable_names_itself(clean_env):
    clean_env.setenv('HG_TREE_ATTEMPTS', 'many')
    with pytest.raises(ValueError, match='HG_TREE_ATTEMPTS'):
        Config.solver_limits()


def test_validate_rejects_non_positive_caps(clean_env):
    class Broken(Config):
        HG_ORACLE_STATE_CAP = 0

    with pytest.raises(ValueError, match='HG_ORACLE_STATE_CAP'):
        Broken.validate()
    Config.validate()


def test_environment_selects_config(monkeypatch):
    monkeypatch.setenv('FLASK_ENV', 'production')
    assert get_config().DEBUG is False
    monkeypatch.setenv('FLASK_ENV', 'development')
    assert get_config().DEBUG is True


def test_command_line_ignores_environment(tmp_path):
    (tmp_path / '.env').write_text('HG_BARRIER_STATE_CAP=lots\n', encoding='utf-8')
    env = dict(os.environ, HG_TREE_ATTEMPTS='many', RATE_LIMIT_PER_MINUTE='x')
    result = subprocess.run(
        [sys.executable, os.path.join(BACKEND, 'cli.py'), 'gen', 'sqs8'],
        cwd=tmp_path, env=env, capture_output=True, text=True,
    )
    assert result.returncode == 0, result.stderr
    assert result.stdout.rstrip().endswith('4 5 6 7')


def test_combined_exit_code():
    results = [BatchResult('a', 0, ''), BatchResult('b', 2, ''), BatchResult('c', 1, '')]
    assert combined_exit_code(results) == 2
    assert combined_exit_code([]) == 0
