"""Command-line interface: ``toruschar <subcommand> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from . import census as cen
from . import kclass as kc
from .config import load_settings
from .knot import KnotParams
from .knotpoly import InvalidK, alexander, boundary_curve, line_count_identity
from .kring import KClass
from .latquot import monomial_map, quotient_basis
from .oracle import BudgetExceeded, enumerate_F, enumerate_G
from .verify import run_grid, write_report_atomic

__all__ = ["main", "build_parser", "render_table"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def render_table(headers: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    """Plain ASCII table."""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    sep = "+" + "+".join("-" * (w + 2) for w in widths) + "+"
    lines = [sep]
    for idx, row in enumerate(cells):
        lines.append("| " + " | ".join(c.ljust(w) for c, w in zip(row, widths)) + " |")
        if idx == 0:
            lines.append(sep)
    lines.append(sep)
    return "\n".join(lines)


def _label_str(lab) -> str:
    if lab is None:
        return "-"
    return f"{list(lab.a_exps)}|{list(lab.b_exps)} /{lab.order}"


def _knot(args) -> KnotParams:
    return KnotParams(args.m, args.n)


def _emit(args, data, text: str) -> None:
    if getattr(args, "format", "table") == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print(text)


def cmd_census(args, settings) -> int:
    p = _knot(args)
    descs = cen.census(args.group, args.rank, p, labels=True, budget=settings.budget)
    data = {
        "group": args.group.upper(),
        "rank": args.rank,
        "m": p.m,
        "n": p.n,
        "strata": [d.to_json() for d in descs],
        "kclass": kc.stratum_sum(descs).to_json(),
    }
    rows = [
        (d.kind.tag.value, d.kind.variant.value if d.kind.variant else "-", d.dimension, d.kclass, _label_str(d.eigen_label))
        for d in descs
    ]
    summary = {}
    for d in descs:
        summary[str(d.kind)] = summary.get(str(d.kind), 0) + 1
    text = render_table(("kind", "variant", "dim", "class", "label"), rows)
    text += "\n" + ", ".join(f"{v} {k}" for k, v in summary.items())
    text += f"\ntotal class: {kc.stratum_sum(descs)}"
    _emit(args, data, text)
    return 0


def cmd_kclass(args, settings) -> int:
    rep = kc.kclass_report(args.group, args.rank, _knot(args))
    _emit(args, rep, rep["kclass_pretty"])
    return 0


def cmd_recover(args, settings) -> int:
    data = json.loads(Path(args.kclass_file).read_text())
    if isinstance(data, dict) and "kclass" in data and isinstance(data["kclass"], dict):
        data = data["kclass"]
    m, n = kc.recover_mn(KClass.from_json(data))
    _emit(args, {"m": m, "n": n}, f"({m},{n})")
    return 0


def cmd_verify(args, settings) -> int:
    ranks = [int(x) for x in args.rank.split(",") if x.strip()]
    report = run_grid(args.grid, ranks, settings.budget)
    if args.out:
        write_report_atomic(report, args.out)
    data = report.to_json()
    s = data["summary"]
    text = f"grid {args.grid}, ranks {ranks}: {s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped"
    for c in report.failed:
        text += f"\nFAIL {c.name} ({c.m},{c.n}) r={c.rank}: {c.detail}"
    _emit(args, {k: v for k, v in data.items() if k != "checks"} | {"failed": [c.to_json() for c in report.failed]}, text)
    return 0 if report.ok else 1


def cmd_alexander(args, settings) -> int:
    p = _knot(args)
    d = alexander(p)
    data = {"m": p.m, "n": p.n, "alexander": d.to_json(), "pretty": str(d)}
    _emit(args, data, str(d))
    return 0


def cmd_curves(args, settings) -> int:
    p = _knot(args)
    ks = [args.k] if args.k is not None else [k for k in range(1, p.m * p.n) if k % p.m and k % p.n]
    curves = [boundary_curve(p, k) for k in ks]
    data = {"m": p.m, "n": p.n, "curves": [c.to_json() for c in curves]}
    rows = [(c.k, f"{c.c:.6f}", c.component_key, "yes" if c.type2 else "no") for c in curves]
    _emit(args, data, render_table(("k", "c_k", "component", "type 2"), rows))
    return 0


def cmd_quotient_basis(args, settings) -> int:
    try:
        weights = [int(x) for x in args.weights.split(",")]
    except ValueError:
        raise UsageError(f"--weights must be comma-separated integers, got {args.weights!r}")
    q = quotient_basis(weights, args.r)
    text = "\n".join(monomial_map(q.matrix))
    if q.trivial:
        text += "\n(action is trivial)"
    elif q.generator_power != 1:
        text += f"\n(generator taken as ξ^{q.generator_power})"
    _emit(args, q.to_json(), text)
    return 0


def cmd_rep_check(args, settings) -> int:
    from .repnum import label_report

    p = _knot(args)
    labels = [("dim4", lab) for lab in enumerate_F(3, p, settings.budget)]
    labels += [("dim2", lab) for lab in enumerate_G(p, settings.budget)]
    labels += [("rank2", lab) for lab in enumerate_F(2, p, settings.budget)]
    if args.max_labels is not None:
        labels = labels[: args.max_labels]
    expected = {"dim4": 4, "dim2": 2, "rank2": 1}
    reports, ok = [], True
    for kind, lab in labels:
        rep = label_report(
            lab,
            p,
            samples=settings.samples,
            seed=settings.seed,
            irreducible_tol=settings.irreducible_tol,
            rank_tol=settings.rank_tol,
            step=settings.fd_step,
        )
        rep["kind"] = kind
        rep["expected_dim"] = expected[kind]
        good = (
            rep["residuals"]["relation"] < 1e-9
            and rep["irreducible"]
            and rep["dim_estimate"] == expected[kind]
        )
        rep["ok"] = good
        ok &= good
        reports.append(rep)
    rows = [
        (r["kind"], _label_str_json(r["label"]), f"{r['residuals']['relation']:.1e}", r["irreducible"], r["dim_estimate"], "ok" if r["ok"] else "FAIL")
        for r in reports
    ]
    data = {"m": p.m, "n": p.n, "seed": settings.seed, "ok": ok, "labels": reports}
    _emit(args, data, render_table(("kind", "label", "residual", "irreducible", "dim", ""), rows))
    return 0 if ok else 1


def _label_str_json(d: dict) -> str:
    return f"{d['a_exps']}|{d['b_exps']} /{d['order']}"


def cmd_lines(args, settings) -> int:
    lc = line_count_identity(_knot(args), settings.budget)
    _emit(args, lc.to_json(), f"lhs={lc.lhs} rhs={lc.rhs} roots={lc.by_roots}")
    return 0 if lc.agree else 1


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="toruschar", description="Character varieties of torus knots in rank 2 and 3.")
    ap.add_argument("--config", help="key=value settings file")
    ap.add_argument("--budget", type=int, help="enumeration step budget")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)
    common = _Parser(add_help=False)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS, help="enumeration step budget")
    common.add_argument("--config", default=argparse.SUPPRESS, help="key=value settings file")

    def knot_args(sp, rank_group=False):
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        if rank_group:
            sp.add_argument("--rank", type=int, choices=(2, 3), required=True)
            sp.add_argument("--group", choices=("sl", "gl", "pgl"), type=str.lower, required=True)
        sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = sub.add_parser("census", parents=[common], help="list the strata and their classes")
    knot_args(sp, True)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("kclass", parents=[common], help="closed-form class in K(Var)")
    knot_args(sp, True)
    sp.set_defaults(func=cmd_kclass)

    sp = sub.add_parser("recover", parents=[common], help="recover (m, n) from an SL(3) class")
    sp.add_argument("--kclass-file", required=True)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_recover)

    sp = sub.add_parser("verify", parents=[common], help="check every identity over a grid of pairs")
    sp.add_argument("--grid", type=int, required=True, help="largest m, n")
    sp.add_argument("--rank", default="2,3")
    sp.add_argument("--out", help="write the JSON report here")
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("alexander", parents=[common], help="Alexander polynomial")
    knot_args(sp)
    sp.set_defaults(func=cmd_alexander)

    sp = sub.add_parser("curves", parents=[common], help="boundary curves c_k")
    knot_args(sp)
    sp.add_argument("--k", type=int)
    sp.set_defaults(func=cmd_curves)

    sp = sub.add_parser("lines", parents=[common], help="line-count identity")
    knot_args(sp)
    sp.set_defaults(func=cmd_lines)

    sp = sub.add_parser("quotient-basis", parents=[common], help="coordinates on (C*)^k / μ_r")
    sp.add_argument("--weights", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--format", choices=("table", "json"), default="table")
    sp.set_defaults(func=cmd_quotient_basis)

    sp = sub.add_parser("rep-check", parents=[common], help="numerical checks of explicit representations")
    knot_args(sp)
    sp.add_argument("--seed", type=lambda s: int(s, 0))
    sp.add_argument("--samples", type=int)
    sp.add_argument("--max-labels", type=int)
    sp.set_defaults(func=cmd_rep_check)
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    json_mode = "json" in argv and "--format" in argv
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
        if args.command == "quotient-basis" and args.r < 1:
            raise UsageError("--r must be >= 1")
        flags = {"budget": args.budget, "seed": getattr(args, "seed", None), "samples": getattr(args, "samples", None)}
        settings = load_settings(flags, path=args.config)
        return args.func(args, settings)
    except UsageError as e:
        _error(json_mode, f"usage: {e}", ap)
        return 2
    except (kc.RecoveryError, BudgetExceeded) as e:
        _error(json_mode, f"{type(e).__name__}: {e}", None)
        return 1
    except (ValueError, InvalidK, FileNotFoundError, KeyError, TypeError) as e:
        _error(json_mode, f"{type(e).__name__}: {e}", None)
        return 2


def _error(json_mode: bool, message: str, ap) -> None:
    if json_mode:
        print(json.dumps({"error": message}))
    else:
        if ap is not None:
            ap.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
