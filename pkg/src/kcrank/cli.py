"""Command line front end.

    kcrank table --k 2 --order 12 --format csv
    kcrank eval --order 4 "1/((-q;q)^2)"
    kcrank verify --suite all --order 60 --kmax 5

Exit status: 0 on success, 1 on verification violations or computation
errors, 2 on bad flags.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path

from . import formats, qexpr, verify
from .errors import KCrankError
from .moments import ROUTES, weighted_moments
from .partitions import DEFAULT_BUDGET, brute_force_table
from .tables import cache_dir, get_table, residues


def _nonneg(text):
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative, got {v}")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="kcrank", description="Exact k-crank tables and finite-order checks.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, k=True):
        if k:
            sp.add_argument("--k", type=_positive, required=True)
        sp.add_argument("--order", type=_nonneg, required=True)
        sp.add_argument("--format", choices=formats.FORMATS, default="text")
        sp.add_argument("--output", type=Path, help="write here instead of stdout")
        sp.add_argument("--cache-dir", help="table cache directory (default: $KCRANK_CACHE_DIR)")

    sp = sub.add_parser("table", help="print M_k(m,n)")
    common(sp)
    sp.add_argument("--cache", action="store_true", help="read/write the on-disk table cache")

    sp = sub.add_parser("residues", help="print M_k(r,d,n)")
    common(sp)
    sp.add_argument("--mod", type=int, required=True)

    sp = sub.add_parser("moments", help="print mu_{2j,k}(-1,n)")
    common(sp)
    sp.add_argument("--j", type=_nonneg, required=True)
    sp.add_argument("--route", choices=ROUTES, default="direct")

    sp = sub.add_parser("eval", help="expand a product expression")
    common(sp, k=False)
    sp.add_argument("expr")

    sp = sub.add_parser("verify", help="run verification suites")
    sp.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")
    sp.add_argument("--order", type=_nonneg, required=True)
    sp.add_argument("--kmax", type=_positive, default=5)
    sp.add_argument("--jmax", type=_nonneg, default=5)
    sp.add_argument("--jobs", type=_positive, default=1)
    sp.add_argument("--format", choices=formats.FORMATS, default="text")
    sp.add_argument("--records", choices=("all", "nonpass"), default="all")
    sp.add_argument("--output", type=Path)

    sp = sub.add_parser("oracle", help="brute-force k-crank table by enumeration")
    common(sp)
    sp.add_argument("--budget", type=_nonneg, default=DEFAULT_BUDGET)
    return p


def _emit(text: str, output: Path | None):
    if output is None:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")
    else:
        output.write_text(text if text.endswith("\n") else text + "\n")


def _table(args):
    directory = None
    if getattr(args, "cache", False) or args.cache_dir:
        directory = cache_dir(args.cache_dir)
    return get_table(args.k, args.order, directory)


def _moments_render(values, fmt):
    if fmt == "json":
        return json.dumps([{"j": v.j, "k": v.k, "n": v.n, "route": v.route, "value": str(v.value)}
                           for v in values], indent=1)
    if fmt == "csv":
        return "n,value\n" + "".join(f"{v.n},{v.value}\n" for v in values)
    return " ".join(str(v.value) for v in values)


def _report_text(rep: verify.Report, records: str) -> str:
    lines = []
    for r in rep.records:
        if records == "all" or r.status != "pass":
            lines.append(f"{r.status:9} {r.suite:10} n={r.n:<4} {r.lhs} {r.observed} {r.rhs} "
                         f"(expected {r.expected}) {json.dumps(r.params, sort_keys=True)}")
    s = rep.summary
    lines.append(f"summary: pass={s['pass']} exception={s['exception']} "
                 f"recorded={s['recorded']} violation={s['violation']}")
    return "\n".join(lines)


def _report_csv(rep: verify.Report, records: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["suite", "n", "status", "lhs", "observed", "rhs", "expected", "params"])
    for r in rep.records:
        if records == "all" or r.status != "pass":
            w.writerow([r.suite, r.n, r.status, r.lhs, r.observed, r.rhs, r.expected,
                        json.dumps(r.params, sort_keys=True)])
    return buf.getvalue()


def _run(args) -> int:
    if args.command == "table":
        _emit(formats.render_table(_table(args), args.format), args.output)
    elif args.command == "residues":
        if args.mod < 2:
            raise KCrankError("--mod must be at least 2")
        _emit(formats.residues_render(residues(_table(args), args.mod), args.format), args.output)
    elif args.command == "moments":
        table = _table(args) if args.route == "direct" else None
        values = weighted_moments(args.j, args.k, args.order, args.route, table)
        _emit(_moments_render(values, args.format), args.output)
    elif args.command == "eval":
        _emit(formats.series_render(qexpr.expand(args.expr, args.order), args.format), args.output)
    elif args.command == "oracle":
        _emit(formats.render_table(brute_force_table(args.k, args.order, args.budget), args.format), args.output)
    elif args.command == "verify":
        names = verify.SUITES if args.suite == "all" else (args.suite,)
        rep = verify.run(names, args.order, args.kmax, args.jmax, args.jobs)
        if args.format == "text":
            text = _report_text(rep, args.records)
        elif args.format == "csv":
            text = _report_csv(rep, args.records)
        else:
            text = rep.to_json(args.records)
        _emit(text, args.output)
        return 0 if rep.ok else 1
    return 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except qexpr.QExprSyntaxError as exc:
        print(f"kcrank: syntax error: {exc}", file=sys.stderr)
        print(f"  {args.expr}\n  {' ' * exc.position}^", file=sys.stderr)
        return 1
    except (KCrankError, ValueError) as exc:
        print(f"kcrank: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
