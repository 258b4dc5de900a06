"""Squared Wigner small-d matrix element, used as the QM baseline.

The combinatorial coefficients are exact rationals; only the trigonometric
powers are floating point. Terms are accumulated with ``math.fsum``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import factorial


@dataclass(frozen=True)
class WignerQuery:
    two_j: int
    two_m: int
    two_mp: int
    theta: float

    def __post_init__(self) -> None:
        if self.two_j < 0:
            raise ValueError(f"two_j must be non-negative, got {self.two_j}")
        for name in ("two_m", "two_mp"):
            v = getattr(self, name)
            if abs(v) > self.two_j:
                raise ValueError(f"|{name}|={abs(v)} exceeds two_j={self.two_j}")
            if (self.two_j - v) % 2:
                raise ValueError(f"{name}={v} has the wrong parity for two_j={self.two_j}")


def _q_range(c_a1: int, d_a1: int, c_b2: int, d_b2: int) -> range:
    # q counts CD pairs; all four factorial arguments below must be >= 0:
    # c_a1 - q, q, c_b2 - c_a1 + q, d_b2 - q
    lo = max(0, c_a1 - c_b2)
    hi = min(c_a1, d_b2)
    return range(lo, hi + 1)


def _half_sum(
    numerator: int, c_a1: int, d_a1: int, c_b2: int, d_b2: int, cos_h: float, sin_h: float
) -> float:
    terms = []
    diff = c_b2 - c_a1  # m' - m
    for q in _q_range(c_a1, d_a1, c_b2, d_b2):
        coeff = Fraction(
            numerator,
            factorial(c_a1 - q) * factorial(q) * factorial(diff + q) * factorial(d_b2 - q),
        )
        sign = -1.0 if (diff + q) % 2 else 1.0
        # 2j + m - m' - 2q and m' - m + 2q
        p_cos = c_a1 + d_b2 - 2 * q
        p_sin = diff + 2 * q
        terms.append(sign * float(coeff) * cos_h**p_cos * sin_h**p_sin)
    return math.fsum(terms)


def wigner_d_squared(query: WignerQuery) -> float:
    """(d^j_{m', m}(theta))^2 from the two-sum factorial formula.

    ``m`` is the initial projection, ``m'`` (``two_mp``) the final one.
    """
    c_a1 = (query.two_j + query.two_m) // 2
    d_a1 = (query.two_j - query.two_m) // 2
    c_b2 = (query.two_j + query.two_mp) // 2
    d_b2 = (query.two_j - query.two_mp) // 2
    half = 0.5 * query.theta
    cos_h, sin_h = math.cos(half), math.sin(half)
    # both sums share the denominator; only the numerator factorials differ
    alice = _half_sum(
        factorial(c_a1) * factorial(d_a1), c_a1, d_a1, c_b2, d_b2, cos_h, sin_h
    )
    bob = _half_sum(
        factorial(c_b2) * factorial(d_b2), c_a1, d_a1, c_b2, d_b2, cos_h, sin_h
    )
    return alice * bob


def d_squared(two_j: int, two_m: int, two_mp: int, theta: float) -> float:
    return wigner_d_squared(WignerQuery(two_j, two_m, two_mp, theta))
