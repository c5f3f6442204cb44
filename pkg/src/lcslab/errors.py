"""Exception types and the global degree ceiling."""

from __future__ import annotations

import os

DEFAULT_TRUNCATION = 8
DEFAULT_CEILING = 12
CEILING_ENV = "LCSLAB_DEGREE_CEILING"


class LcsLabError(Exception):
    """Base class for computation errors (CLI exit code 1)."""


class PreconditionError(LcsLabError, ValueError):
    pass


class DegreeCeilingError(LcsLabError):
    pass


def degree_ceiling() -> int:
    raw = os.environ.get(CEILING_ENV)
    if raw is None:
        return DEFAULT_CEILING
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"{CEILING_ENV} must be an integer, got {raw!r}") from None


def check_degree(total: int) -> None:
    ceiling = degree_ceiling()
    if total > ceiling:
        raise DegreeCeilingError(
            f"total degree {total} exceeds the ceiling {ceiling} (set {CEILING_ENV} to raise it)"
        )
