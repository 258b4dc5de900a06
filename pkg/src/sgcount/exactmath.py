"""Exact integer and rational primitives for factorial-based counting.

Every counting formula in the package reduces to ratios of factorial
products. These are evaluated with Python's arbitrary-precision ``int`` and
``fractions.Fraction`` so nothing overflows or cancels at large ``n``.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import prod
from typing import Sequence

# Factorial table size built at first use. Requests past it extend the table.
DEFAULT_N_MAX = 512

ExactRatio = Fraction


class NonIntegralRatio(ArithmeticError):
    """A factorial ratio that should be an integer left a remainder."""


_table: list[int] = []
_lock = threading.Lock()


def _ensure(k: int) -> None:
    if k < len(_table):
        return
    with _lock:
        top = max(k, DEFAULT_N_MAX)
        if not _table:
            _table.append(1)
        for i in range(len(_table), top + 1):
            _table.append(_table[-1] * i)


def factorial(k: int) -> int:
    if k < 0:
        raise ValueError(f"factorial of negative number {k}")
    _ensure(k)
    return _table[k]


def factorial_table(k_max: int) -> list[int]:
    """Return the memoized table, guaranteed to cover ``0..k_max``.

    Hot loops index this list directly instead of calling :func:`factorial`.
    """
    _ensure(k_max)
    return _table


def multinomial(parts: Sequence[int]) -> int:
    """(sum parts)! / prod(parts!)."""
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    total = sum(parts)
    fac = factorial_table(total)
    return fac[total] // prod(fac[p] for p in parts)


def perm_ratio(numerator_counts: Sequence[int], denominator_counts: Sequence[int]) -> int:
    """prod(numerator_counts!) / prod(denominator_counts!), required to be exact.

    Raises :class:`NonIntegralRatio` if the division leaves a remainder, which
    means the two count vectors are not a grouped refinement of each other.
    """
    if any(c < 0 for c in numerator_counts) or any(c < 0 for c in denominator_counts):
        raise ValueError("counts must be non-negative")
    if sum(numerator_counts) != sum(denominator_counts):
        raise ValueError(
            f"count totals differ: {sum(numerator_counts)} != {sum(denominator_counts)}"
        )
    fac = factorial_table(max([0, *numerator_counts, *denominator_counts]))
    num = prod(fac[c] for c in numerator_counts)
    den = prod(fac[c] for c in denominator_counts)
    q, r = divmod(num, den)
    if r:
        raise NonIntegralRatio(
            f"{list(numerator_counts)}! / {list(denominator_counts)}! is not an integer"
        )
    return q


def ratio(numerator: int, denominator: int) -> ExactRatio:
    """Canonical exact ratio (lowest terms, positive denominator)."""
    return Fraction(numerator, denominator)
