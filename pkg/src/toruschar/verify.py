"""Grid verification: every closed form against its enumeration, over all coprime pairs."""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass, field
from math import comb
from pathlib import Path
from typing import Callable, Sequence

from . import census as cen
from . import kclass as kc
from .knot import KnotParams, coprime_pairs
from .knotpoly import alexander, line_count_identity
from .kring import L
from .oracle import DEFAULT_BUDGET, BudgetExceeded, enumerate_F, enumerate_G, falling_factorial, n_side, n_table

__all__ = ["Check", "GridReport", "run_grid", "write_report_atomic"]


@dataclass
class Check:
    name: str
    m: int
    n: int
    rank: int | None
    status: str  # "pass", "fail" or "skipped"
    detail: str = ""

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class GridReport:
    grid: int
    ranks: tuple[int, ...]
    budget: int | None
    checks: list[Check] = field(default_factory=list)

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        counts = {s: sum(1 for c in self.checks if c.status == s) for s in ("pass", "fail", "skipped")}
        return {
            "grid": self.grid,
            "ranks": list(self.ranks),
            "budget": self.budget,
            "ok": self.ok,
            "summary": counts,
            "checks": [c.to_json() for c in self.checks],
        }


def _run(report: GridReport, name: str, p: KnotParams, rank, fn: Callable[[], tuple[bool, str]]):
    m, n = p.sorted_pair
    try:
        ok, detail = fn()
        status = "pass" if ok else "fail"
    except BudgetExceeded as e:
        status, detail = "skipped", str(e)
    except Exception as e:  # a crash is a failed check, reported not raised
        status, detail = "fail", f"{type(e).__name__}: {e}"
    report.checks.append(Check(name, m, n, rank, status, detail))


def _pair_checks(report: GridReport, p: KnotParams, ranks: Sequence[int], budget):
    m, n = p.m, p.n

    for r in ranks:
        def f_count(r=r):
            got = len(enumerate_F(r, p, budget))
            want = comb(n - 1, r - 1) * comb(m - 1, r - 1) // r
            return got == want, f"|F|={got}, formula={want}"

        _run(report, "max_dim_count", p, r, f_count)

        def n_identity(r=r):
            lhs_n = sum(n_side(r, n, k) for k in range(n))
            lhs_m = sum(n_side(r, m, k) for k in range(m))
            lhs_nm = sum(n_table(r, p, k, k, budget) for k in range(n * m))
            want_n, want_m = falling_factorial(n, r), falling_factorial(m, r)
            ok = lhs_n == want_n and lhs_m == want_m and lhs_nm == want_n * want_m
            return ok, f"ΣN_n={lhs_n}/{want_n}, ΣN_m={lhs_m}/{want_m}, ΣN(k,k)={lhs_nm}/{want_n * want_m}"

        _run(report, "n_identities", p, r, n_identity)

        for group in ("SL", "PGL", "GL"):
            def stratum(group=group, r=r):
                descs = cen.census(group, r, p, labels=True, budget=budget)
                got, want = kc.stratum_sum(descs), kc.kclass(group, r, p)
                return got == want, f"Σ strata = {got}, closed form = {want}"

            _run(report, f"stratum_sum_{group.lower()}", p, r, stratum)

        def gl_relation(r=r):
            gl = kc.stratum_sum(cen.census_gl(r, p, labels=False))
            pgl = kc.stratum_sum(cen.census_pgl(r, p, labels=False))
            return gl == (L - 1) * pgl, f"[GL] = {gl}"

        _run(report, "gl_relation", p, r, gl_relation)

    if 3 in ranks:
        def g_count():
            got = len(enumerate_G(p, budget))
            want = (n - 1) * (m - 1) * (n + m - 4) // 2
            return got == want, f"|G|={got}, formula={want}"

        _run(report, "dim2_count", p, 3, g_count)

        def roundtrip():
            got = kc.recover_mn(kc.kclass_sl(3, p))
            return got == p.sorted_pair, f"recovered {got}"

        _run(report, "recover_roundtrip", p, 3, roundtrip)

        def lines():
            lc = line_count_identity(p, budget)
            return lc.agree, f"lhs={lc.lhs}, rhs={lc.rhs}, roots={lc.by_roots}"

        _run(report, "line_count", p, 3, lines)

    def alex():
        d = alexander(p)
        ok = d.degree == (m - 1) * (n - 1) and d(1) == 1 and d.is_palindromic()
        return ok, str(d) if d.degree <= 12 else f"degree {d.degree}"

    _run(report, "alexander", p, None, alex)


def run_grid(max_mn: int, ranks: Sequence[int] = (2, 3), budget: int | None = DEFAULT_BUDGET) -> GridReport:
    """All checks for every coprime 2 <= m < n <= max_mn, in (m, n) order."""
    ranks = tuple(sorted(set(ranks)))
    for r in ranks:
        if r not in (2, 3):
            raise ValueError(f"unsupported rank {r}")
    report = GridReport(max_mn, ranks, budget)
    for m, n in coprime_pairs(max_mn):
        _pair_checks(report, KnotParams(m, n), ranks, budget)
    return report


def write_report_atomic(report: GridReport | dict, path: str | os.PathLike) -> None:
    """Write JSON through a temporary file in the same directory, then rename."""
    data = report.to_json() if isinstance(report, GridReport) else report
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, indent=2, ensure_ascii=False)
            fh.write("\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
