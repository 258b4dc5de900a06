"""Exit criteria for the package, one test per criterion.

Run ``pytest tests/test_acceptance.py`` and read the "acceptance criteria"
section of the summary for the per-criterion verdicts.
"""

import math
import random
import statistics
import time
from fractions import Fraction

from sgcount.beamsplitter import PhotonQuery, bmap_from_tau, probability_bs, tau_from_bmap
from sgcount.cli import verify_oracle
from sgcount.sgmodel import ModelQuery, epsilon_cardinality, probability
from sgcount.statespace import Base8Counts
from sgcount.wignerqm import d_squared


def sweep(n, two_j, two_m_a1, **kw):
    return [probability(ModelQuery(n, two_j, two_m_a1, b, **kw)) for b in range(n + 1)]


def max_delta(tables, two_m_b2):
    return max(t[two_m_b2].abs_delta for t in tables)


def test_c01_oracle_equivalence(criterion):
    t0 = time.perf_counter()
    reports = [verify_oracle(n) for n in range(1, 7)]
    dt = time.perf_counter() - t0
    cells = sum(r.cells_checked for r in reports)
    failures = [r.failure for r in reports if r.failure]
    criterion(f"{cells} cells over n<=6, both sides, {dt:.1f}s, failures={failures or 'none'}")
    assert not failures
    assert dt < 60


def test_c02_worked_example(criterion):
    counts = Base8Counts(aa=1, ab=1, ba=1, cc=1)
    ea, eb = epsilon_cardinality(counts, "a"), epsilon_cardinality(counts, "b")
    criterion(f"|eps_a|={ea} |eps_b|={eb}")
    assert ea == eb == 2


def test_c03_exact_normalization(criterion):
    rng = random.Random(20261018)
    t0 = time.perf_counter()
    checked = 0
    while checked < 500:
        n = rng.randint(1, 100)
        two_j = rng.randint(0, min(n, 4))
        two_m = rng.choice(range(-two_j, two_j + 1, 2))
        b = rng.randint(0, n)
        mode = rng.choice([None, "plain", "interference"])
        table = probability(ModelQuery(n, two_j, two_m, b, mode), with_qm=False)
        assert table.total() == Fraction(1)
        assert all(o.probability >= 0 for o in table.outcomes)
        checked += 1
    dt = time.perf_counter() - t0
    criterion(f"{checked} random queries sum to exactly 1, {dt:.1f}s")
    assert dt < 30


def test_c04_determinism_limits(criterion):
    checked = 0
    for n in (1, 2, 5, 17, 100):
        for two_j in range(min(n, 4) + 1):
            for ma in range(-two_j, two_j + 1, 2):
                assert probability(ModelQuery(n, two_j, ma, 0))[ma].probability == 1
                assert probability(ModelQuery(n, two_j, ma, n))[-ma].probability == 1
                checked += 2
    criterion(f"{checked} endpoint tables exact")


def test_c05_spin_half_n2(criterion):
    table = probability(ModelQuery(2, 1, 1, 1))
    got = table.probabilities()
    criterion(f"P = {got}")
    assert got == {1: Fraction(1, 2), -1: Fraction(1, 2)}


def test_c06_fig4_left(criterion):
    t0 = time.perf_counter()
    tables = sweep(100, 1, 1)
    dt = time.perf_counter() - t0
    worst = max_delta(tables, 1)
    ends = (tables[0][1].probability, tables[-1][1].probability)
    criterion(f"max|delta|={worst:.4f} (want [0.01, 0.08]), endpoints {ends}, {dt:.1f}s")
    assert 0.01 <= worst <= 0.08
    assert ends == (1, 0)
    assert tables[0][1].p_qm == 1.0 and abs(tables[-1][1].p_qm) < 1e-15
    assert dt < 10


def test_c07_fig4_right_tuned(criterion):
    untuned = max_delta(sweep(100, 1, 1), 1)
    t0 = time.perf_counter()
    tuned_tables = sweep(100, 1, 1, l_condition="paper-tuned")
    assert tuned_tables[0].query.l_values == (-49, 49)
    tuned = max_delta(tuned_tables, 1)
    dt = time.perf_counter() - t0
    criterion(f"tuned max|delta|={tuned:.4f} < untuned {untuned:.4f}, {dt:.1f}s")
    assert tuned < untuned
    assert dt < 10


def test_c08_fig6_spin_one(criterion):
    t0 = time.perf_counter()
    parts = []
    ok = True
    for ma in (2, 0):
        tables = sweep(100, 2, ma)
        assert all(t.total() == 1 and not t.negative_weights for t in tables)
        worst = max(t.max_abs_delta() for t in tables)
        corr = min(
            statistics.correlation([t[mb].p_model for t in tables], [t[mb].p_qm for t in tables])
            for mb in (-2, 0, 2)
        )
        parts.append(f"m_a1={ma // 2}: max|delta|={worst:.4f} corr={corr:.4f}")
        ok = ok and worst < 0.10 and corr > 0.99
    dt = time.perf_counter() - t0
    criterion("; ".join(parts) + f" (want <0.10, >0.99), {dt:.1f}s")
    assert ok
    assert dt < 30


def test_c09_granularity(criterion):
    table = probability(ModelQuery(6, 2, 2, 1))
    qm6 = table[-2].p_qm
    qm60 = d_squared(2, 2, -2, math.pi / 60)
    zero60 = probability(ModelQuery(60, 2, 2, 1))[-2].probability
    criterion(f"n=6 P={table[-2].probability} qm={qm6:.5f}; n=60 P={zero60} qm={qm60:.3g}")
    assert table[-2].probability == 0
    assert abs(qm6 - 0.00449) <= 0.0005
    assert zero60 == 0
    assert abs(qm60 - 4.7e-7) <= 1e-7


def test_c10_wigner_validity(criterion):
    thetas = [k * math.pi / 49 for k in range(50)]
    worst_row = 0.0
    for two_j in range(9):
        for m in range(-two_j, two_j + 1, 2):
            for th in thetas:
                s = math.fsum(d_squared(two_j, m, mp, th) for mp in range(-two_j, two_j + 1, 2))
                worst_row = max(worst_row, abs(s - 1))
    worst_closed = 0.0
    for th in thetas:
        c2, s2 = math.cos(th / 2) ** 2, math.sin(th / 2) ** 2
        pairs = [
            (d_squared(1, 1, 1, th), c2),
            (d_squared(1, 1, -1, th), s2),
            (d_squared(2, 2, 2, th), c2**2),
            (d_squared(2, 2, 0, th), math.sin(th) ** 2 / 2),
            (d_squared(2, 0, 0, th), math.cos(th) ** 2),
            (d_squared(2, 2, -2, th), s2**2),
        ]
        worst_closed = max(worst_closed, *(abs(a - b) for a, b in pairs))
    criterion(f"row-sum err {worst_row:.1e}, closed-form err {worst_closed:.1e} (want <1e-12)")
    assert worst_row < 1e-12 and worst_closed < 1e-12


def test_c11_beam_splitter(criterion):
    t0 = time.perf_counter()
    b = bmap_from_tau(100, 0.4, 0.01)
    tau = tau_from_bmap(100, b)
    table = probability_bs(PhotonQuery(100, 2, 0, b))
    p11 = table[(1, 1)]
    p20 = table[(2, 0)]
    dt = time.perf_counter() - t0
    criterion(
        f"b_map={b} tau={tau:.4f}: |P(1,1)-2tau(1-tau)|={abs(p11.p_model - 2 * tau * (1 - tau)):.4f}, "
        f"|delta(2,0)|={p20.abs_delta:.4f} > |delta(1,1)|={p11.abs_delta:.4f}"
    )
    assert abs(p11.p_model - 2 * tau * (1 - tau)) <= 0.02
    assert p20.abs_delta > p11.abs_delta
    assert dt < 10


def test_c12_symmetry_suite(criterion):
    t0 = time.perf_counter()
    checked = 0
    for n in range(1, 9):
        for two_j in range(n + 1):
            for ma in range(-two_j, two_j + 1, 2):
                for b in range(n + 1):
                    for mode in ("plain", "interference"):
                        base = probability(ModelQuery(n, two_j, ma, b, mode), with_qm=False)
                        flip = probability(ModelQuery(n, two_j, -ma, b, mode), with_qm=False)
                        refl = probability(ModelQuery(n, two_j, ma, n - b, mode), with_qm=False)
                        for o in base.outcomes:
                            assert flip[-o.two_m_b2].probability == o.probability
                            assert refl[-o.two_m_b2].probability == o.probability
                        checked += 1
    dt = time.perf_counter() - t0
    criterion(f"{checked} tables (n<=8, both modes) symmetric exactly, {dt:.1f}s")
    assert dt < 60
