"""Quantum numbers <-> symbol counts.

All half-integer quantum numbers are carried doubled (``two_j = 2j`` and so
on) so that every conversion stays in integer arithmetic. The rotation angle
is never a float here: it is the number of B symbols in the map, ``b_map``,
with ``theta = pi * b_map / n``.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Iterator, Literal, Optional

Role = Literal["a1", "b2", "map"]

BASE8_SYMBOLS = ("aa", "ab", "ba", "bb", "cc", "cd", "dc", "dd")


@dataclass(frozen=True)
class QuantumConfig:
    n: int
    two_j: int
    two_m_a1: int
    two_m_b2: int
    two_l_a1: int
    two_l_b2: int
    b_map: int
    two_mu: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.two_j <= self.n:
            raise ValueError(f"two_j={self.two_j} outside [0, n={self.n}]")
        for name in ("two_m_a1", "two_m_b2"):
            if abs(getattr(self, name)) > self.two_j:
                raise ValueError(f"|{name}| exceeds two_j={self.two_j}")
        for name in ("two_l_a1", "two_l_b2"):
            if abs(getattr(self, name)) > self.n - self.two_j:
                raise ValueError(f"|{name}| exceeds n - two_j={self.n - self.two_j}")
        if not 0 <= self.b_map <= self.n:
            raise ValueError(f"b_map={self.b_map} outside [0, n={self.n}]")

    @property
    def two_g(self) -> int:
        # n = 2j + 2g
        return self.n - self.two_j

    def to_dict(self) -> dict[str, int]:
        return asdict(self)


@dataclass(frozen=True)
class Base8Counts:
    aa: int = 0
    ab: int = 0
    ba: int = 0
    bb: int = 0
    cc: int = 0
    cd: int = 0
    dc: int = 0
    dd: int = 0

    def __post_init__(self) -> None:
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise ValueError(f"negative count {f.name}={getattr(self, f.name)}")

    @property
    def n(self) -> int:
        return sum(self.as_tuple())

    def as_tuple(self) -> tuple[int, ...]:
        return (self.aa, self.ab, self.ba, self.bb, self.cc, self.cd, self.dc, self.dd)


@dataclass(frozen=True)
class Base4Counts:
    a: int
    b: int
    c: int
    d: int
    role: Role

    def __post_init__(self) -> None:
        if min(self.a, self.b, self.c, self.d) < 0:
            raise ValueError(f"negative base-4 count in {self}")
        if self.role == "map" and (self.c or self.d):
            raise ValueError("a map holds only A and B symbols")

    @property
    def n(self) -> int:
        return self.a + self.b + self.c + self.d

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)


@dataclass(frozen=True)
class Infeasible:
    """No count vector realises the requested quantum numbers."""

    reason: str

    def __bool__(self) -> bool:
        return False


def quadrupled_counts(
    n: int,
    two_j: int,
    two_m_a1: int,
    two_m_b2: int,
    two_l_a1: int,
    two_l_b2: int,
    b_map: int,
    two_mu: int,
) -> tuple[int, ...]:
    """Four times each base-8 count, in ``BASE8_SYMBOLS`` order.

    ``n * (1 - theta/pi)`` is ``n - b_map``, so every entry is an integer;
    the actual count is the entry divided by 4 when that division is exact.
    """
    even = n - b_map
    odd = n + b_map
    j, ma, mb, la, lb, mu = two_j, two_m_a1, two_m_b2, two_l_a1, two_l_b2, two_mu
    return (
        even - j + la + lb + mu,
        odd - j + la - lb - mu,
        odd - j - la + lb - mu,
        even - j - la - lb + mu,
        even + j + ma + mb - mu,
        -even + j + ma - mb + mu,
        -even + j - ma + mb + mu,
        even + j - ma - mb - mu,
    )


def base8_from_quantum(config: QuantumConfig) -> Base8Counts | Infeasible:
    quads = quadrupled_counts(
        config.n,
        config.two_j,
        config.two_m_a1,
        config.two_m_b2,
        config.two_l_a1,
        config.two_l_b2,
        config.b_map,
        config.two_mu,
    )
    counts = []
    for name, q in zip(BASE8_SYMBOLS, quads):
        if q % 4:
            return Infeasible(f"{name} is not an integer ({q}/4)")
        if q < 0:
            return Infeasible(f"{name} is negative ({q // 4})")
        counts.append(q // 4)
    return Base8Counts(*counts)


def quantum_from_base8(counts: Base8Counts) -> QuantumConfig:
    aa, ab, ba, bb, cc, cd, dc, dd = counts.as_tuple()
    return QuantumConfig(
        n=counts.n,
        two_j=cc + cd + dc + dd,
        two_m_a1=cc + cd - dc - dd,
        two_m_b2=cc + dc - cd - dd,
        two_l_a1=aa + ab - ba - bb,
        two_l_b2=aa + ba - ab - bb,
        b_map=ab + ba + cd + dc,
        two_mu=cd + dc + aa + bb,
    )


def marginals(counts: Base8Counts) -> tuple[Base4Counts, Base4Counts, Base4Counts]:
    """Per-observer and map base-4 counts: (a1 side, b2 side, map)."""
    aa, ab, ba, bb, cc, cd, dc, dd = counts.as_tuple()
    a1 = Base4Counts(aa + ab, ba + bb, cc + cd, dc + dd, "a1")
    b2 = Base4Counts(aa + ba, ab + bb, cc + dc, cd + dd, "b2")
    mp = Base4Counts(aa + bb + cc + dd, ab + ba + cd + dc, 0, 0, "map")
    return a1, b2, mp


def base4_from_quantum(n: int, two_j: int, two_m: int, two_l: int, role: Role) -> Base4Counts | Infeasible:
    """Event counts (A, B, C, D) from (n, j, m, l)."""
    quads = (n - two_j + two_l, n - two_j - two_l, two_j + two_m, two_j - two_m)
    counts = []
    for name, q in zip("ABCD", quads):
        if q % 2:
            return Infeasible(f"{name} is not an integer ({q}/2)")
        if q < 0:
            return Infeasible(f"{name} is negative ({q // 2})")
        counts.append(q // 2)
    return Base4Counts(*counts, role=role)


def map_counts(n: int, b_map: int) -> Base4Counts:
    return Base4Counts(n - b_map, b_map, 0, 0, "map")


def feasible_completions(
    n: int,
    two_j: int,
    two_m_a1: int,
    two_m_b2: int,
    b_map: int,
    two_l_a1: Optional[int] = None,
    two_l_b2: Optional[int] = None,
    two_mu: Optional[int] = None,
) -> Iterator[tuple[QuantumConfig, Base8Counts]]:
    """Every completion of the free quantum numbers with a valid count vector.

    Free ``l`` values are scanned over ``[-(n - two_j), n - two_j]`` in steps of
    2 and free ``mu`` over ``[-2n, 2n]`` in steps of 1; each candidate is kept
    only if all eight counts are non-negative integers. Yields
    ``(config, counts)`` in ascending (two_l_a1, two_l_b2, two_mu) order.
    """
    two_g = n - two_j
    l_range = range(-two_g, two_g + 1, 2)
    la_values = l_range if two_l_a1 is None else (two_l_a1,)
    lb_values = l_range if two_l_b2 is None else (two_l_b2,)
    mu_values = range(-2 * n, 2 * n + 1) if two_mu is None else (two_mu,)
    for la in la_values:
        for lb in lb_values:
            for mu in mu_values:
                quads = quadrupled_counts(n, two_j, two_m_a1, two_m_b2, la, lb, b_map, mu)
                if any(q % 4 or q < 0 for q in quads):
                    continue
                counts = Base8Counts(*(q // 4 for q in quads))
                yield QuantumConfig(n, two_j, two_m_a1, two_m_b2, la, lb, b_map, mu), counts


def feasible_values(
    n: int,
    two_j: int,
    two_m_a1: int,
    two_m_b2: int,
    b_map: int,
    two_l_a1: Optional[int] = None,
    two_l_b2: Optional[int] = None,
    two_mu: Optional[int] = None,
) -> Iterator[QuantumConfig]:
    """Like :func:`feasible_completions` but yields only the configs."""
    for config, _ in feasible_completions(
        n, two_j, two_m_a1, two_m_b2, b_map, two_l_a1, two_l_b2, two_mu
    ):
        yield config
