"""Counting model for two rotated Stern-Gerlach detectors.

Weights are exact integers built from the cardinalities of the two elementary
ontic state spaces (Alice's event fixed, Bob's event fixed). Probabilities are
exact ``Fraction`` values; float projections and the Wigner reference are
attached for comparison only.
"""

from __future__ import annotations

import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Optional, Union

from .exactmath import perm_ratio
from .statespace import Base8Counts, feasible_completions, marginals
from .wignerqm import d_squared

Mode = Literal["plain", "interference"]
Side = Literal["a", "b"]
LCondition = Union[int, Literal["sum-all", "paper-tuned"]]


class DegenerateNormalization(ZeroDivisionError):
    """Every outcome weight is zero, so no distribution exists."""


class NegativeWeight(UserWarning):
    """An outcome received a negative total weight."""


def paper_tuned_l(n: int, two_j: int) -> int:
    """Doubled l_a1 near (n/2 - j)/2 with the parity the counts require."""
    two_g = n - two_j
    v = two_g // 2
    if (v - two_g) % 2:
        v -= 1
    return v


@dataclass(frozen=True)
class ModelQuery:
    n: int
    two_j: int
    two_m_a1: int
    b_map: int
    mode: Optional[Mode] = None
    l_condition: LCondition = "sum-all"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.two_j <= self.n:
            raise ValueError(f"two_j={self.two_j} outside [0, n={self.n}]")
        if abs(self.two_m_a1) > self.two_j or (self.two_j - self.two_m_a1) % 2:
            raise ValueError(f"two_m_a1={self.two_m_a1} invalid for two_j={self.two_j}")
        if not 0 <= self.b_map <= self.n:
            raise ValueError(f"b_map={self.b_map} outside [0, n={self.n}]")
        if self.mode not in (None, "plain", "interference"):
            raise ValueError(f"unknown mode {self.mode!r}")
        lc = self.l_condition
        if isinstance(lc, str):
            if lc not in ("sum-all", "paper-tuned"):
                raise ValueError(f"unknown l_condition {lc!r}")
        elif abs(lc) > self.n - self.two_j:
            raise ValueError(f"|two_l_a1|={abs(lc)} exceeds n - two_j")

    @property
    def effective_mode(self) -> Mode:
        if self.mode is not None:
            return self.mode
        return "plain" if self.two_j == 1 else "interference"

    @property
    def l_values(self) -> Optional[tuple[int, ...]]:
        """Allowed doubled l_a1 values, or None for an unrestricted sum."""
        lc = self.l_condition
        if lc == "sum-all":
            return None
        if lc == "paper-tuned":
            v = paper_tuned_l(self.n, self.two_j)
            return (v,) if v == 0 else (-v, v)
        return (lc,)

    @property
    def m_b2_values(self) -> range:
        return range(-self.two_j, self.two_j + 1, 2)


@dataclass(frozen=True)
class Outcome:
    two_m_b2: int
    weight: int
    probability: Fraction
    p_qm: Optional[float] = None

    @property
    def p_model(self) -> float:
        return float(self.probability)

    @property
    def abs_delta(self) -> Optional[float]:
        if self.p_qm is None:
            return None
        return abs(self.p_model - self.p_qm)


@dataclass
class ProbabilityTable:
    query: ModelQuery
    outcomes: list[Outcome]
    negative_weights: list[int] = field(default_factory=list)

    def __getitem__(self, two_m_b2: int) -> Outcome:
        for o in self.outcomes:
            if o.two_m_b2 == two_m_b2:
                return o
        raise KeyError(two_m_b2)

    def probabilities(self) -> dict[int, Fraction]:
        return {o.two_m_b2: o.probability for o in self.outcomes}

    def total(self) -> Fraction:
        return sum((o.probability for o in self.outcomes), Fraction(0))

    def max_abs_delta(self) -> Optional[float]:
        deltas = [o.abs_delta for o in self.outcomes if o.abs_delta is not None]
        return max(deltas) if deltas else None


def epsilon_cardinality(counts: Base8Counts, side: Side) -> int:
    """Size of the elementary state space with one observer's event held fixed."""
    a1, b2, _ = marginals(counts)
    fixed = a1 if side == "a" else b2
    return perm_ratio(fixed.as_tuple(), counts.as_tuple())


def _mu_sign(two_mu: int) -> int:
    # feasible two_mu values for fixed (l_a1, l_b2) differ by multiples of 4,
    # so floor(two_mu / 4) differences equal |delta mu| / 2
    return -1 if (two_mu // 4) % 2 else 1


def upsilon(
    n: int,
    two_j: int,
    two_m_a1: int,
    two_m_b2: int,
    two_l_a1: int,
    two_l_b2: int,
    b_map: int,
    mode: Mode,
) -> int:
    """Elementary counting sum over mu for fully specified local quantum numbers."""
    cells = [
        (cfg.two_mu, epsilon_cardinality(c, "a"), epsilon_cardinality(c, "b"))
        for cfg, c in feasible_completions(
            n, two_j, two_m_a1, two_m_b2, b_map, two_l_a1, two_l_b2
        )
    ]
    if mode == "plain":
        return sum(ea * eb for _, ea, eb in cells)
    total = 0
    for mu_a, ea, _ in cells:
        for mu_b, _, eb in cells:
            half_delta = abs(mu_a - mu_b) // 4
            total += (-1) ** half_delta * ea * eb
    return total


def _weight(
    n: int,
    two_j: int,
    two_m_a1: int,
    two_m_b2: int,
    b_map: int,
    mode: Mode,
    l_values: Optional[tuple[int, ...]],
) -> int:
    """Sum of upsilon over (l_a1, l_b2), enumerating count tuples directly.

    The C/D block of the count vector has a single free entry (CD); given it,
    the A/B block must hold ``k = b_map - CD - DC`` off-diagonal symbols and
    every split of those counts is one (l_a1, l_b2, mu) cell.
    """
    two_g = n - two_j
    c_a = (two_j + two_m_a1) // 2
    d_a = two_j - c_a
    c_b = (two_j + two_m_b2) // 2
    d_b = two_j - c_b
    comb = math.comb
    a_targets = None if l_values is None else {(two_g + la) // 2 for la in l_values if (two_g + la) % 2 == 0}
    if a_targets is not None and not a_targets:
        return 0

    plain = 0
    signed_a: dict[tuple[int, int], int] = defaultdict(int)
    signed_b: dict[tuple[int, int], int] = defaultdict(int)
    for cd in range(max(0, c_a - c_b), min(c_a, d_b) + 1):
        cc = c_a - cd
        dc = c_b - cc
        k = b_map - cd - dc
        if k < 0 or k > two_g:
            continue
        cd_a = comb(c_a, cc) * comb(d_a, dc)
        cd_b = comb(c_b, cc) * comb(d_b, cd)
        for ab in range(k + 1):
            ba = k - ab
            if a_targets is None:
                aa_values = range(two_g - k + 1)
            else:
                aa_values = [t - ab for t in a_targets if 0 <= t - ab <= two_g - k]
            for aa in aa_values:
                bb = two_g - k - aa
                big_a1, small_a1 = aa + ab, ba + bb
                big_b2, small_b2 = aa + ba, ab + bb
                ea = comb(big_a1, aa) * comb(small_a1, ba) * cd_a
                eb = comb(big_b2, aa) * comb(small_b2, ab) * cd_b
                if mode == "plain":
                    plain += ea * eb
                else:
                    key = (big_a1, big_b2)
                    s = _mu_sign(cd + dc + aa + bb)
                    signed_a[key] += s * ea
                    signed_b[key] += s * eb
    if mode == "plain":
        return plain
    return sum(signed_a[key] * signed_b[key] for key in signed_a)


def big_upsilon(query: ModelQuery, two_m_b2: int) -> int:
    """Total weight of one outcome, summed over l_b2 (and l_a1 unless fixed)."""
    if abs(two_m_b2) > query.two_j or (query.two_j - two_m_b2) % 2:
        raise ValueError(f"two_m_b2={two_m_b2} invalid for two_j={query.two_j}")
    return _weight(
        query.n,
        query.two_j,
        query.two_m_a1,
        two_m_b2,
        query.b_map,
        query.effective_mode,
        query.l_values,
    )


def probability(query: ModelQuery, with_qm: bool = True) -> ProbabilityTable:
    """Normalised outcome distribution over two_m_b2.

    Raises :class:`DegenerateNormalization` when every weight vanishes. Negative
    weights are kept, listed on the table and reported with a
    :class:`NegativeWeight` warning.
    """
    weights = {mb: big_upsilon(query, mb) for mb in query.m_b2_values}
    total = sum(weights.values())
    if total == 0:
        raise DegenerateNormalization(f"all weights vanish for {query}")
    negative = [mb for mb, w in weights.items() if w < 0]
    if negative:
        warnings.warn(f"negative weight for two_m_b2 in {negative} ({query})", NegativeWeight)
    theta = math.pi * query.b_map / query.n
    outcomes = [
        Outcome(
            two_m_b2=mb,
            weight=w,
            probability=Fraction(w, total),
            p_qm=d_squared(query.two_j, query.two_m_a1, mb, theta) if with_qm else None,
        )
        for mb, w in weights.items()
    ]
    return ProbabilityTable(query, outcomes, negative)
