"""Runtime caps, overridable via LINTERSECT_* environment variables."""

from __future__ import annotations

import os


def env_int(name: str, default: int) -> int:
    raw = os.environ.get(f"LINTERSECT_{name}", "")
    try:
        return int(raw) if raw else default
    except ValueError:
        return default


def env_float(name: str, default: float) -> float:
    raw = os.environ.get(f"LINTERSECT_{name}", "")
    try:
        return float(raw) if raw else default
    except ValueError:
        return default


def matrix_cap() -> int:
    """Max columns of any exact-rank matrix (row budget)."""
    return env_int("MATRIX_CAP", 200_000)


def search_cap() -> int:
    """Max ground-set size for exhaustive search."""
    return env_int("SEARCH_CAP", 10)


def time_budget() -> float:
    """Seconds allowed per search problem."""
    return env_float("TIME_BUDGET", 60.0)
