"""Classification sweep over extended canonical weight types."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .coxeter import WeightType, extended_canonical_coxeter, verify_representation, weight_types
from .spectra import DEFAULT_TOL, RootLocationReport, classify_self_reciprocal

CSV_COLUMNS = ("weights", "degree", "on_circle", "off_circle", "rho_is_one", "cyclotomic_indices")


@dataclass(frozen=True)
class SweepRow:
    weights: tuple[int, ...]
    report: RootLocationReport
    representation_ok: bool
    # None when the implication is vacuous (rho > 1 or p_t = 1)
    monotone_ok: bool | None = None

    @property
    def off_bound_ok(self) -> bool:
        off = self.report.off_unit_circle
        return off <= 4 and off % 2 == 0

    def to_dict(self) -> dict:
        d = self.report.to_dict()
        d.update(
            weights=list(self.weights),
            representation_ok=self.representation_ok,
            off_bound_ok=self.off_bound_ok,
            monotone_ok=self.monotone_ok,
        )
        return d


@dataclass(frozen=True)
class SweepReport:
    max_sum: int
    max_t: int | None
    tol: Fraction
    rows: tuple[SweepRow, ...]

    def summary(self) -> dict:
        hist: dict[str, int] = {}
        for r in self.rows:
            key = str(r.report.off_unit_circle)
            hist[key] = hist.get(key, 0) + 1
        return {
            "types": len(self.rows),
            "rho_one": sum(r.report.is_rho_one for r in self.rows),
            "max_off_circle": max((r.report.off_unit_circle for r in self.rows), default=0),
            "off_circle_histogram": hist,
            "off_bound_violations": [list(r.weights) for r in self.rows if not r.off_bound_ok],
            "monotonicity_violations": [list(r.weights) for r in self.rows if r.monotone_ok is False],
            "representation_failures": [list(r.weights) for r in self.rows if not r.representation_ok],
        }

    def to_dict(self) -> dict:
        return {
            "grid": {
                "max_sum": self.max_sum,
                "max_t": self.max_t,
                "tol": [self.tol.numerator, self.tol.denominator],
            },
            "rows": [r.to_dict() for r in self.rows],
            "summary": self.summary(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, delimiter=";", lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.rows:
            writer.writerow(
                [
                    ",".join(map(str, r.weights)),
                    r.report.degree,
                    r.report.on_unit_circle,
                    r.report.off_unit_circle,
                    str(r.report.is_rho_one).lower(),
                    ",".join(map(str, r.report.cyclotomic_indices)),
                ]
            )
        return buf.getvalue()


def _evaluate(args: tuple[tuple[int, ...], Fraction]) -> tuple[tuple[int, ...], RootLocationReport, bool]:
    ws, tol = args
    report = classify_self_reciprocal(extended_canonical_coxeter(ws), tol)
    return ws, report, verify_representation(ws)


def sweep(max_sum: int, max_t: int | None = None, tol: Fraction = DEFAULT_TOL, jobs: int = 1) -> SweepReport:
    """Classify f^ for every weight type with sum <= max_sum (and t <= max_t).

    Rows come out ordered by (sum, weights) whatever ``jobs`` is.  The
    monotonicity flag of a rho = 1 row compares it with the type whose
    largest weight is one smaller; that type always lies in the grid.
    """
    if max_sum < 2:
        raise ValueError("max_sum must be >= 2")
    types = [w.weights for w in weight_types(max_sum, max_t)]
    tasks = [(ws, Fraction(tol)) for ws in types]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_evaluate, tasks, chunksize=64))
    else:
        results = [_evaluate(t) for t in tasks]
    rho_one = {ws: rep.is_rho_one for ws, rep, _ in results}
    rows = []
    for ws, rep, rep_ok in results:
        mono = None
        if rep.is_rho_one and ws[-1] >= 2:
            mono = rho_one[WeightType(ws[:-1] + (ws[-1] - 1,)).weights]
        rows.append(SweepRow(ws, rep, rep_ok, mono))
    return SweepReport(max_sum, max_t, Fraction(tol), tuple(rows))
