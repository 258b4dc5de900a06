"""Brute-force oracle over explicit symbol sequences.

Symbols are elements of the Klein four-group Z2 x Z2, stored as 2-bit
integers so that the group operation is plain XOR. Everything here
materialises sequences, so it is only usable for small ``n``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from enum import IntEnum
from typing import Iterable, Iterator, Literal, Sequence

from .statespace import QuantumConfig, Role

MAX_ENUMERATION_N = 10


class Symbol(IntEnum):
    # value = 2*first_bit + second_bit
    A = 0b00
    B = 0b11
    C = 0b10
    D = 0b01

    @property
    def bits(self) -> tuple[int, int]:
        return (self.value >> 1, self.value & 1)

    def __str__(self) -> str:
        return self.name


A, B, C, D = Symbol.A, Symbol.B, Symbol.C, Symbol.D

# admissible experiment symbols: pairs whose difference is A or B
BASE8_PAIRS = ((A, A), (A, B), (B, A), (B, B), (C, C), (C, D), (D, C), (D, D))


class SequenceLengthError(ValueError):
    pass


@dataclass(frozen=True)
class SymbolSequence:
    symbols: tuple[Symbol, ...]
    role: Role

    def __post_init__(self) -> None:
        if self.role == "map" and any(s not in (A, B) for s in self.symbols):
            raise ValueError("maps may only contain A and B")

    @classmethod
    def parse(cls, text: str, role: Role) -> "SymbolSequence":
        return cls(tuple(Symbol[ch] for ch in text.upper()), role)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return "".join(s.name for s in self.symbols)

    def count(self, symbol: Symbol) -> int:
        return self.symbols.count(symbol)


@dataclass(frozen=True)
class ExperimentSequence:
    pairs: tuple[tuple[Symbol, Symbol], ...]

    def __post_init__(self) -> None:
        for pair in self.pairs:
            if pair not in BASE8_PAIRS:
                raise ValueError(f"{pair[0]}{pair[1]} is not an admissible experiment symbol")

    @classmethod
    def from_events(cls, a1: SymbolSequence, b2: SymbolSequence) -> "ExperimentSequence":
        if len(a1) != len(b2):
            raise SequenceLengthError("event sequences differ in length")
        return cls(tuple(zip(a1.symbols, b2.symbols)))

    def quantum_numbers(self) -> QuantumConfig:
        """Read the eight quantum numbers straight off the sequence."""
        a1 = SymbolSequence(tuple(p[0] for p in self.pairs), "a1")
        b2 = SymbolSequence(tuple(p[1] for p in self.pairs), "b2")
        cnt = Counter(self.pairs)
        two_mu = cnt[(C, D)] + cnt[(D, C)] + cnt[(A, A)] + cnt[(B, B)]
        return QuantumConfig(
            n=len(self.pairs),
            two_j=a1.count(C) + a1.count(D),
            two_m_a1=a1.count(C) - a1.count(D),
            two_m_b2=b2.count(C) - b2.count(D),
            two_l_a1=a1.count(A) - a1.count(B),
            two_l_b2=b2.count(A) - b2.count(B),
            b_map=sum(1 for x, y in self.pairs if klein_add(x, y) is B),
            two_mu=two_mu,
        )


def klein_add(x: Symbol, y: Symbol) -> Symbol:
    return Symbol(x ^ y)


def apply_map(event: SymbolSequence, mapping: SymbolSequence) -> SymbolSequence:
    """Elementwise group sum of an event with a map."""
    if mapping.role != "map":
        raise ValueError("second operand must be a map")
    if len(event) != len(mapping):
        raise SequenceLengthError(f"lengths differ: {len(event)} vs {len(mapping)}")
    out = tuple(klein_add(x, y) for x, y in zip(event.symbols, mapping.symbols))
    return SymbolSequence(out, "a1" if event.role == "b2" else "b2")


def _guard(n: int) -> None:
    if n > MAX_ENUMERATION_N:
        raise ValueError(f"enumeration is limited to n <= {MAX_ENUMERATION_N}, got {n}")


def enumerate_maps(n: int, b_map: int) -> Iterator[SymbolSequence]:
    """All A/B sequences of length n with exactly ``b_map`` B's."""
    _guard(n)
    for positions in itertools.combinations(range(n), b_map):
        syms = [A] * n
        for p in positions:
            syms[p] = B
        yield SymbolSequence(tuple(syms), "map")


def enumerate_event_sequences(
    n: int, two_j: int, two_m: int, two_l: int, role: Role = "a1"
) -> set[SymbolSequence]:
    """Every length-n base-4 sequence with the given (j, m, l)."""
    _guard(n)
    out = set()
    for syms in itertools.product((A, B, C, D), repeat=n):
        c, d = syms.count(C), syms.count(D)
        a, b = syms.count(A), syms.count(B)
        if c + d == two_j and c - d == two_m and a - b == two_l:
            out.add(SymbolSequence(syms, role))
    return out


def event_state_space(n: int, two_j: int, role: Role = "a1") -> set[SymbolSequence]:
    """Union over all m and l of the event sequences for fixed (n, j)."""
    _guard(n)
    return {
        SymbolSequence(syms, role)
        for syms in itertools.product((A, B, C, D), repeat=n)
        if syms.count(C) + syms.count(D) == two_j
    }


def brute_force_cells(
    n: int,
    fixed_side: Literal["a", "b"],
    fixed_sequence: SymbolSequence,
    b_map: int,
) -> Counter[QuantumConfig]:
    """Count experiment sequences per quantum-number cell with one event fixed.

    Every map with ``b_map`` B's is applied to the fixed event; each result
    is paired with it (fixed event on the ``fixed_side``) and binned by the
    experiment's eight quantum numbers.
    """
    if len(fixed_sequence) != n:
        raise SequenceLengthError(f"fixed sequence has length {len(fixed_sequence)}, expected {n}")
    cells: Counter[QuantumConfig] = Counter()
    for mapping in enumerate_maps(n, b_map):
        partner = apply_map(fixed_sequence, mapping)
        if fixed_side == "a":
            exp = ExperimentSequence(tuple(zip(fixed_sequence.symbols, partner.symbols)))
        else:
            exp = ExperimentSequence(tuple(zip(partner.symbols, fixed_sequence.symbols)))
        cells[exp.quantum_numbers()] += 1
    return cells


def representative(counts: Sequence[int], role: Role) -> SymbolSequence:
    """A canonical sequence with base-4 counts (A, B, C, D) = ``counts``."""
    syms: list[Symbol] = []
    for sym, k in zip((A, B, C, D), counts):
        syms.extend([sym] * k)
    return SymbolSequence(tuple(syms), role)


def merge_cells(parts: Iterable[Counter[QuantumConfig]]) -> Counter[QuantumConfig]:
    total: Counter[QuantumConfig] = Counter()
    for part in parts:
        total.update(part)
    return total
