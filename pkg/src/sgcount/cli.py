"""Command-line sweeps: model vs QM tables, oracle verification, granularity scans.

Exit codes: 0 success, 1 oracle mismatch, 2 invalid or infeasible request,
3 model diagnostic (negative weight).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .beamsplitter import NoGridPoint, PhotonQuery, bmap_from_tau, probability_bs, tau_from_bmap
from .enumeration import brute_force_cells, enumerate_event_sequences, representative
from .exactmath import multinomial
from .sgmodel import DegenerateNormalization, LCondition, ModelQuery, NegativeWeight, epsilon_cardinality, probability
from .statespace import (
    base4_from_quantum,
    base8_from_quantum,
    feasible_completions,
    marginals,
    quantum_from_base8,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_NEGATIVE = 3

SG_COLUMNS = ["theta_over_pi", "two_m_b2", "p_model", "p_qm", "abs_delta"]
BS_COLUMNS = ["tau", "c_b2", "d_b2", "p_model", "p_qm", "abs_delta"]
ORACLE_MAX_N = 6
# QM values below this are trig round-off at theta = pi, not a signal
QM_FLOOR = 1e-15


class SpecError(ValueError):
    pass


@dataclass
class SweepSpec:
    subcommand: str
    n: int
    two_j: Optional[int] = None
    two_m_a1: Optional[int] = None
    c_a1: Optional[int] = None
    d_a1: Optional[int] = None
    mode: Optional[str] = None
    l_condition: LCondition = "sum-all"
    grid: Optional[list[int]] = None
    taus: Optional[list[float]] = None
    tau_tol: float = 0.01
    out: Optional[str] = None
    fmt: str = "csv"

    def b_grid(self) -> list[int]:
        if self.taus is not None:
            return sorted({bmap_from_tau(self.n, t, self.tau_tol) for t in self.taus})
        grid = list(range(self.n + 1)) if self.grid is None else sorted(set(self.grid))
        bad = [b for b in grid if not 0 <= b <= self.n]
        if bad:
            raise SpecError(f"grid values {bad} outside [0, {self.n}]")
        return grid

    def photon_mode(self) -> bool:
        return self.c_a1 is not None or self.d_a1 is not None

    def model_query(self, b_map: int) -> ModelQuery:
        if self.two_j is None or self.two_m_a1 is None:
            raise SpecError("--two-j and --two-ma are required")
        return ModelQuery(self.n, self.two_j, self.two_m_a1, b_map, self.mode, self.l_condition)

    def photon_query(self, b_map: int) -> PhotonQuery:
        if self.c_a1 is None or self.d_a1 is None:
            raise SpecError("--ca and --da are required")
        return PhotonQuery(self.n, self.c_a1, self.d_a1, b_map, self.mode, self.l_condition)


def fmt_float(x: float) -> str:
    return f"{x:.12g}"


def fmt_ratio(b_map: int, n: int) -> str:
    return str(Fraction(b_map, n))


def _write(rows: list[dict], columns: list[str], spec: SweepSpec) -> None:
    if spec.fmt == "json":
        text = json.dumps([_json_row(r) for r in rows], indent=1) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        text = buf.getvalue()
    if spec.out:
        with open(spec.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json_row(row: dict) -> dict:
    out = {}
    for k, v in row.items():
        if k in ("theta_over_pi", "warnings", "signal"):
            out[k] = v
        else:
            try:
                out[k] = int(v)
            except ValueError:
                out[k] = float(v)
    return out


def run_compare_sg(spec: SweepSpec) -> int:
    rows = []
    diagnostics = []
    for b in spec.b_grid():
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NegativeWeight)
            table = probability(spec.model_query(b))
        for o in table.outcomes:
            row = {
                "theta_over_pi": fmt_ratio(b, spec.n),
                "two_m_b2": o.two_m_b2,
                "p_model": fmt_float(o.p_model),
                "p_qm": fmt_float(o.p_qm),
                "abs_delta": fmt_float(o.abs_delta),
            }
            if o.two_m_b2 in table.negative_weights:
                row["warnings"] = "NegativeWeight"
                diagnostics.append((b, o.two_m_b2))
            rows.append(row)
    columns = SG_COLUMNS + (["warnings"] if diagnostics else [])
    if diagnostics:
        for r in rows:
            r.setdefault("warnings", "")
    _write(rows, columns, spec)
    if diagnostics:
        print(f"negative weight at (b_map, two_m_b2) {diagnostics}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def run_compare_bs(spec: SweepSpec) -> int:
    rows = []
    diagnostics = []
    for b in spec.b_grid():
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", NegativeWeight)
            table = probability_bs(spec.photon_query(b))
        tau = tau_from_bmap(spec.n, b)
        for o in table.outcomes:
            row = {
                "tau": fmt_float(tau),
                "c_b2": o.c_b2,
                "d_b2": o.d_b2,
                "p_model": fmt_float(o.p_model),
                "p_qm": fmt_float(o.p_qm),
                "abs_delta": fmt_float(o.abs_delta),
            }
            if (o.c_b2, o.d_b2) in table.negative_weights:
                row["warnings"] = "NegativeWeight"
                diagnostics.append((b, o.c_b2))
            rows.append(row)
    columns = BS_COLUMNS + (["warnings"] if diagnostics else [])
    if diagnostics:
        for r in rows:
            r.setdefault("warnings", "")
    _write(rows, columns, spec)
    if diagnostics:
        print(f"negative weight at (b_map, c_b2) {diagnostics}", file=sys.stderr)
        return EXIT_NEGATIVE
    return EXIT_OK


def run_granularity_scan(spec: SweepSpec) -> int:
    """Outcomes the model forbids outright, with their QM probabilities.

    ``signal`` is true where QM gives a non-zero probability.
    """
    rows = []
    photon = spec.photon_mode()
    for b in spec.b_grid():
        if photon:
            table = probability_bs(spec.photon_query(b))
            for o in table.outcomes:
                if o.probability == 0:
                    rows.append({
                        "tau": fmt_float(tau_from_bmap(spec.n, b)),
                        "c_b2": o.c_b2,
                        "d_b2": o.d_b2,
                        "p_model": "0",
                        "p_qm": fmt_float(o.p_qm),
                        "signal": o.p_qm > QM_FLOOR,
                    })
        else:
            table = probability(spec.model_query(b))
            for o in table.outcomes:
                if o.probability == 0:
                    rows.append({
                        "theta_over_pi": fmt_ratio(b, spec.n),
                        "two_m_b2": o.two_m_b2,
                        "p_model": "0",
                        "p_qm": fmt_float(o.p_qm),
                        "signal": o.p_qm > QM_FLOOR,
                    })
    if photon:
        columns = ["tau", "c_b2", "d_b2", "p_model", "p_qm", "signal"]
    else:
        columns = ["theta_over_pi", "two_m_b2", "p_model", "p_qm", "signal"]
    _write(rows, columns, spec)
    return EXIT_OK


@dataclass
class OracleReport:
    n: int
    cells_checked: int = 0
    configs_checked: int = 0
    state_spaces_checked: int = 0
    failure: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def _base4_vectors(n: int):
    for a in range(n + 1):
        for b in range(n + 1 - a):
            for c in range(n + 1 - a - b):
                yield (a, b, c, n - a - b - c)


def verify_oracle(n: int) -> OracleReport:
    """Check every feasible config of length n against explicit enumeration.

    For each event count vector and each map, a representative event is
    enumerated against all maps; every resulting cell count must equal the
    closed-form cardinality, and the cells found must be exactly the feasible
    configurations with that event marginal.
    """
    if not 1 <= n <= ORACLE_MAX_N:
        raise SpecError(f"oracle verification needs 1 <= n <= {ORACLE_MAX_N}")
    report = OracleReport(n)

    # event state-space sizes
    for two_j in range(n + 1):
        two_g = n - two_j
        for two_m in range(-two_j, two_j + 1, 2):
            for two_l in range(-two_g, two_g + 1, 2):
                seqs = enumerate_event_sequences(n, two_j, two_m, two_l)
                counts = base4_from_quantum(n, two_j, two_m, two_l, "a1")
                expected = multinomial(counts.as_tuple()) if counts else 0
                report.state_spaces_checked += 1
                if len(seqs) != expected:
                    report.failure = (
                        f"state space n={n} two_j={two_j} two_m={two_m} two_l={two_l}: "
                        f"enumerated {len(seqs)}, formula {expected}"
                    )
                    return report

    # closed-form side: every feasible config, grouped by fixed marginal
    expected: dict[tuple, dict] = {}
    for two_j in range(n + 1):
        for ma in range(-two_j, two_j + 1, 2):
            for mb in range(-two_j, two_j + 1, 2):
                for b in range(n + 1):
                    for cfg, counts in feasible_completions(n, two_j, ma, mb, b):
                        report.configs_checked += 1
                        if base8_from_quantum(cfg) != counts or quantum_from_base8(counts) != cfg:
                            report.failure = f"roundtrip failed at {cfg.to_dict()}"
                            return report
                        a1, b2, mp = marginals(counts)
                        if not (a1.n == b2.n == mp.n == n and mp.b == b):
                            report.failure = f"marginal inconsistency at {cfg.to_dict()}"
                            return report
                        for side, fixed in (("a", a1), ("b", b2)):
                            key = (side, fixed.as_tuple(), b)
                            expected.setdefault(key, {})[cfg] = epsilon_cardinality(counts, side)

    for vec in _base4_vectors(n):
        for b in range(n + 1):
            for side in ("a", "b"):
                seq = representative(vec, "a1" if side == "a" else "b2")
                cells = brute_force_cells(n, side, seq, b)
                want = expected.get((side, vec, b), {})
                if set(cells) != set(want):
                    missing = set(want) ^ set(cells)
                    cfg = sorted(missing, key=lambda c: tuple(c.to_dict().values()))[0]
                    report.failure = f"cell set mismatch (side {side}) at {cfg.to_dict()}"
                    return report
                for cfg, count in sorted(cells.items(), key=lambda kv: tuple(kv[0].to_dict().values())):
                    report.cells_checked += 1
                    if count != want[cfg]:
                        report.failure = (
                            f"side {side}: brute force {count} != formula {want[cfg]} at {cfg.to_dict()}"
                        )
                        return report
    return report


def run_oracle_verify(spec: SweepSpec) -> int:
    reports = []
    for n in range(1, spec.n + 1):
        t0 = time.perf_counter()
        rep = verify_oracle(n)
        reports.append((rep, time.perf_counter() - t0))
        if not rep.passed:
            break
    lines = []
    for rep, dt in reports:
        status = "PASS" if rep.passed else "FAIL"
        lines.append(
            f"n={rep.n} {status} state_spaces={rep.state_spaces_checked} "
            f"configs={rep.configs_checked} cells={rep.cells_checked} ({dt:.2f}s)"
        )
        if rep.failure:
            lines.append(f"  first failure: {rep.failure}")
    if spec.fmt == "json":
        text = json.dumps(
            [
                {
                    "n": rep.n,
                    "passed": rep.passed,
                    "state_spaces": rep.state_spaces_checked,
                    "configs": rep.configs_checked,
                    "cells": rep.cells_checked,
                    "failure": rep.failure,
                }
                for rep, _ in reports
            ],
            indent=1,
        ) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if spec.out:
        with open(spec.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if all(rep.passed for rep, _ in reports) else EXIT_MISMATCH


def _parse_l(value: str) -> LCondition:
    if value in ("sum-all", "paper-tuned"):
        return value  # type: ignore[return-value]
    try:
        return int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, 'paper-tuned' or 'sum-all', got {value!r}")


def _parse_grid(value: str) -> Optional[list[int]]:
    if value == "all":
        return None
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must be 'all' or comma-separated integers, got {value!r}")


def _parse_floats(value: str) -> list[float]:
    try:
        return [float(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {value!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sgcount", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="sequence length")
    common.add_argument("--mode", choices=["plain", "interference"], default=None,
                        help="counting sum (default: plain for j=1/2, interference otherwise)")
    common.add_argument("--fix-two-la", type=_parse_l, default="sum-all", dest="l_condition",
                        help="doubled l_a1 to condition on, 'paper-tuned' or 'sum-all'")
    common.add_argument("--grid", type=_parse_grid, default=None, help="'all' or comma list of b_map values")
    common.add_argument("--out", default=None, help="output path (default stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv", dest="fmt")

    sg = argparse.ArgumentParser(add_help=False)
    sg.add_argument("--two-j", type=int, dest="two_j")
    sg.add_argument("--two-ma", type=int, dest="two_m_a1")

    bs = argparse.ArgumentParser(add_help=False)
    bs.add_argument("--ca", type=int, dest="c_a1")
    bs.add_argument("--da", type=int, dest="d_a1")
    bs.add_argument("--tau", type=_parse_floats, default=None, dest="taus",
                    help="comma list of transmittances, snapped to the b_map grid")
    bs.add_argument("--tau-tol", type=float, default=0.01, help="snapping tolerance for --tau")

    sub.add_parser("compare-sg", parents=[common, sg], help="model vs Wigner over a b_map grid")
    sub.add_parser("compare-bs", parents=[common, bs], help="beam-splitter model vs QM")
    sub.add_parser("oracle-verify", parents=[common], help="brute-force check for all lengths up to --n")
    sub.add_parser("granularity-scan", parents=[common, sg, bs],
                   help="outcomes with zero model probability and their QM values")
    return parser


RUNNERS = {
    "compare-sg": run_compare_sg,
    "compare-bs": run_compare_bs,
    "oracle-verify": run_oracle_verify,
    "granularity-scan": run_granularity_scan,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    spec = SweepSpec(**vars(args))
    try:
        return RUNNERS[spec.subcommand](spec)
    except (SpecError, NoGridPoint, DegenerateNormalization, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
