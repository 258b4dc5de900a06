"""Photon-number states through a lossless beam splitter.

Input photon numbers (c_a1, d_a1) play the roles of the a1 C/D counts and
output numbers (c_b2, d_b2) those of b2, so ``2j = c + d`` and
``2m = c - d``. Transmittance is derived from the map as
``tau = cos^2(pi * b_map / (2n))``; internally only ``(n, b_map)`` is used.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .sgmodel import LCondition, Mode, ModelQuery, probability
from .wignerqm import d_squared


class NoGridPoint(ValueError):
    """No b_map reproduces the requested transmittance within tolerance."""


def tau_from_bmap(n: int, b_map: int) -> float:
    if n < 1 or not 0 <= b_map <= n:
        raise ValueError(f"b_map={b_map} outside [0, n={n}]")
    return math.cos(b_map * math.pi / (2 * n)) ** 2


def bmap_from_tau(n: int, tau: float, tolerance: float) -> int:
    """Grid point whose transmittance is closest to ``tau``."""
    if not 0.0 <= tau <= 1.0:
        raise ValueError(f"tau={tau} outside [0, 1]")
    best = min(range(n + 1), key=lambda b: abs(tau_from_bmap(n, b) - tau))
    err = abs(tau_from_bmap(n, best) - tau)
    if err > tolerance:
        raise NoGridPoint(f"nearest grid value for n={n} misses tau={tau} by {err:.3g}")
    return best


@dataclass(frozen=True)
class PhotonQuery:
    n: int
    c_a1: int
    d_a1: int
    b_map: int
    mode: Optional[Mode] = None
    l_condition: LCondition = "sum-all"

    def __post_init__(self) -> None:
        if self.c_a1 < 0 or self.d_a1 < 0:
            raise ValueError("photon numbers must be non-negative")
        if self.c_a1 + self.d_a1 > self.n:
            raise ValueError(f"{self.c_a1 + self.d_a1} photons do not fit in n={self.n}")
        if not 0 <= self.b_map <= self.n:
            raise ValueError(f"b_map={self.b_map} outside [0, n={self.n}]")

    @property
    def photons(self) -> int:
        return self.c_a1 + self.d_a1

    @property
    def tau(self) -> float:
        return tau_from_bmap(self.n, self.b_map)

    def model_query(self) -> ModelQuery:
        return ModelQuery(
            n=self.n,
            two_j=self.photons,
            two_m_a1=self.c_a1 - self.d_a1,
            b_map=self.b_map,
            mode=self.mode,
            l_condition=self.l_condition,
        )


@dataclass(frozen=True)
class PhotonOutcome:
    c_b2: int
    d_b2: int
    weight: int
    probability: Fraction
    p_qm: float

    @property
    def p_model(self) -> float:
        return float(self.probability)

    @property
    def abs_delta(self) -> float:
        return abs(self.p_model - self.p_qm)


@dataclass
class PhotonTable:
    query: PhotonQuery
    outcomes: list[PhotonOutcome]
    negative_weights: list[tuple[int, int]]

    def __getitem__(self, key: tuple[int, int]) -> PhotonOutcome:
        for o in self.outcomes:
            if (o.c_b2, o.d_b2) == key:
                return o
        raise KeyError(key)

    def total(self) -> Fraction:
        return sum((o.probability for o in self.outcomes), Fraction(0))


def qm_reference_bs(c_a1: int, d_a1: int, c_b2: int, tau: float) -> float:
    """QM output probability for photon numbers (c_b2, c_a1 + d_a1 - c_b2)."""
    if not 0 <= c_b2 <= c_a1 + d_a1:
        raise ValueError("output photon numbers violate conservation")
    d_b2 = c_a1 + d_a1 - c_b2
    theta = 2.0 * math.acos(math.sqrt(min(max(tau, 0.0), 1.0)))
    return d_squared(c_a1 + d_a1, c_a1 - d_a1, c_b2 - d_b2, theta)


def probability_bs(query: PhotonQuery) -> PhotonTable:
    """Output distribution, ordered by ascending c_b2."""
    table = probability(query.model_query(), with_qm=False)
    tau = query.tau
    total = query.photons
    outcomes = []
    for o in table.outcomes:
        c_b2 = (total + o.two_m_b2) // 2
        outcomes.append(
            PhotonOutcome(
                c_b2=c_b2,
                d_b2=total - c_b2,
                weight=o.weight,
                probability=o.probability,
                p_qm=qm_reference_bs(query.c_a1, query.d_a1, c_b2, tau),
            )
        )
    negative = [((total + mb) // 2, (total - mb) // 2) for mb in table.negative_weights]
    return PhotonTable(query, outcomes, negative)
