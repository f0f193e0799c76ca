"""
Process-level runtime knobs read from the environment.
"""

import os

from config.settings import THREADS_ENV_VAR
from .errors import ConfigError


def worker_count() -> int:
    """Number of parallel workers allowed by the environment (default 1)."""
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None or raw.strip() == "":
        return 1
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ConfigError(f"{THREADS_ENV_VAR} must be >= 1, got {value}")
    return value
