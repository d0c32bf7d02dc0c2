"""Shared exceptions and resource-guard helpers."""

from __future__ import annotations

# Exhaustive enumeration is refused above this many vertices unless forced;
# 11! is about 4e7 permutations, already minutes of work single-threaded.
DEFAULT_BRUTE_CAP = 11


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured resource budget."""


class ConsistencyError(RuntimeError):
    """Two internal computation routes disagree; always a bug, never an input error."""


def check_brute_cap(n: int, cap: int, force: bool, what: str) -> None:
    if n > cap and not force:
        raise ResourceLimitError(
            f"{what} at n={n} exceeds the brute-force cap of {cap}; "
            f"pass force=True (CLI: --force) to run it anyway"
        )
