import pytest
from hypothesis import given, settings, strategies as st

from sgcount.statespace import (
    Base8Counts,
    Infeasible,
    QuantumConfig,
    base4_from_quantum,
    base8_from_quantum,
    feasible_completions,
    feasible_values,
    marginals,
    quantum_from_base8,
)

WORKED = QuantumConfig(n=4, two_j=1, two_m_a1=1, two_m_b2=1, two_l_a1=1, two_l_b2=1, b_map=2, two_mu=1)
WORKED_COUNTS = Base8Counts(aa=1, ab=1, ba=1, cc=1)


def test_base8_worked_example():
    assert base8_from_quantum(WORKED) == WORKED_COUNTS


def test_base8_all_c():
    # j = n/2 leaves no room for A/B symbols, so l is forced to 0
    cfg = QuantumConfig(2, 2, 2, 2, 0, 0, 0, 0)
    assert base8_from_quantum(cfg) == Base8Counts(cc=2)


def test_base8_infeasible_mu():
    result = base8_from_quantum(
        QuantumConfig(4, 1, 1, 1, 1, 1, 2, 3)
    )
    assert isinstance(result, Infeasible)
    assert not result
    assert result.reason.startswith("aa")
    # the only feasible mu at this config is 1
    assert [c.two_mu for c in feasible_values(4, 1, 1, 1, 2, 1, 1)] == [1]


def test_quantum_from_base8_examples():
    assert quantum_from_base8(WORKED_COUNTS) == WORKED
    assert quantum_from_base8(Base8Counts(cc=2)) == QuantumConfig(2, 2, 2, 2, 0, 0, 0, 0)


@st.composite
def base8_vectors(draw):
    n = draw(st.integers(1, 12))
    cuts = sorted(draw(st.lists(st.integers(0, n), min_size=7, max_size=7)))
    parts = [b - a for a, b in zip([0, *cuts], [*cuts, n])]
    return Base8Counts(*parts)


@settings(max_examples=1000)
@given(base8_vectors())
def test_roundtrip(counts):
    cfg = quantum_from_base8(counts)
    assert base8_from_quantum(cfg) == counts
    assert quantum_from_base8(base8_from_quantum(cfg)) == cfg
    assert sum(counts.as_tuple()) == cfg.n


@given(base8_vectors())
def test_marginals_sum_to_n(counts):
    a1, b2, mp = marginals(counts)
    assert a1.n == b2.n == mp.n == counts.n
    cfg = quantum_from_base8(counts)
    # Table-1 values recomputed from the quantum numbers
    assert a1 == base4_from_quantum(cfg.n, cfg.two_j, cfg.two_m_a1, cfg.two_l_a1, "a1")
    assert b2 == base4_from_quantum(cfg.n, cfg.two_j, cfg.two_m_b2, cfg.two_l_b2, "b2")
    assert mp.b == cfg.b_map


def test_marginals_examples():
    a1, b2, mp = marginals(WORKED_COUNTS)
    assert a1.as_tuple() == (2, 1, 1, 0)
    assert b2.as_tuple() == (2, 1, 1, 0)  # (C, A, A, B)
    assert mp.as_tuple() == (2, 2, 0, 0)
    a1, b2, mp = marginals(Base8Counts(dd=5))
    assert a1.as_tuple() == (0, 0, 0, 5) and b2.as_tuple() == (0, 0, 0, 5)
    assert mp.as_tuple() == (5, 0, 0, 0)


def test_feasible_values_spin_half_n2():
    found = list(feasible_values(2, 1, 1, 1, 1))
    assert len(found) == 2
    assert {(c.two_l_a1, c.two_l_b2) for c in found} == {(1, -1), (-1, 1)}


def test_feasible_values_granularity_empty():
    assert list(feasible_values(6, 2, 2, -2, 1)) == []


def test_feasible_values_all_pass():
    for cfg, counts in feasible_completions(5, 1, 1, -1, 2):
        assert base8_from_quantum(cfg) == counts


@pytest.mark.parametrize("n", range(1, 8))
def test_mu_parity(n):
    # feasible two_mu for fixed local numbers are congruent mod 4
    for two_j in range(n + 1):
        two_g = n - two_j
        for ma in range(-two_j, two_j + 1, 2):
            for mb in range(-two_j, two_j + 1, 2):
                for b in range(n + 1):
                    for la in range(-two_g, two_g + 1, 2):
                        for lb in range(-two_g, two_g + 1, 2):
                            mus = [c.two_mu for c in feasible_values(n, two_j, ma, mb, b, la, lb)]
                            assert len({m % 4 for m in mus}) <= 1


def test_config_validation():
    with pytest.raises(ValueError):
        QuantumConfig(2, 3, 0, 0, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        QuantumConfig(4, 1, 3, 1, 0, 0, 0, 0)
    with pytest.raises(ValueError):
        QuantumConfig(4, 1, 1, 1, 0, 0, 5, 0)
    assert WORKED.two_g == 3
