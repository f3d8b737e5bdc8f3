from __future__ import annotations

import os


class CycleChainError(Exception):
    """Base class for package errors."""


class InputError(CycleChainError, ValueError):
    """Malformed graph input or out-of-range parameter."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ResourceError(CycleChainError):
    """An exact search would exceed its configured budget."""


DEFAULT_CAP = 20
HARD_CAP = 28
CAP_ENV = "CYCLECHAIN_CAP"


def enumeration_cap(override: int | None = None) -> int:
    """Effective vertex cap for exhaustive subset searches.

    Explicit ``override`` wins, then ``$CYCLECHAIN_CAP``, then the default.
    """
    if override is None:
        raw = os.environ.get(CAP_ENV)
        override = int(raw) if raw else DEFAULT_CAP
    if override > HARD_CAP:
        raise InputError(f"cap {override} exceeds hard cap {HARD_CAP}")
    if override < 0:
        raise InputError("cap must be non-negative")
    return override


def check_cap(n: int, cap: int | None = None, what: str = "exhaustive search") -> None:
    c = enumeration_cap(cap)
    if n > c:
        raise ResourceError(f"{what}: n={n} exceeds enumeration cap {c}")
