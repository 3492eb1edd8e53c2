"""Command-line interface: ``trilat count | series | reconstruct | verify``.

Exit codes: 0 success, 1 failed check or no exact reconstruction, 2 invalid
arguments, 3 resource guard tripped.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import contfrac, formulas
from .errors import DomainError, PreconditionError, ReconstructionError, ResourceGuardError
from .lattice import DomainSpec, count_walks
from .series import INT, RAT, TruncSeries, pade_reconstruct, parse_rational, solve_kernel_root
from .verify import ALIASES, SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

SERIES_SOURCES = ("line-total", "line-boundary", "triangle-total", "corner", "centre-side",
                  "cf-convergent", "kernel-root")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _rational(text: str):
    try:
        return parse_rational(text)
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError(f"{text!r} is not an exact rational (use e.g. 1, -2 or 3/4)") from None


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trilat", description="Exact walk counting on triangular lattice domains.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "csv", "plain")):
        p.add_argument("--format", choices=formats, default="plain")
        p.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = sub.add_parser("count", help="count walks by dynamic programming")
    p.add_argument("--d", type=int, default=2)
    p.add_argument("--L", type=_nonneg, required=True)
    p.add_argument("--start", type=_int_list, required=True)
    p.add_argument("--n", type=_nonneg, required=True, help="maximum walk length")
    p.add_argument("--backend", choices=("numba", "numpy"), default=None)
    common(p)

    for name, helptext in (("series", "expand a generating function"),
                           ("reconstruct", "recover an exact rational function from a series")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("source", choices=SERIES_SOURCES)
        p.add_argument("--order", type=_nonneg, default=None)
        p.add_argument("--L", type=_nonneg)
        p.add_argument("--u", type=_nonneg)
        p.add_argument("--v", type=_nonneg)
        p.add_argument("--w", type=_nonneg)
        p.add_argument("--model", choices=("line", "triangle"))
        p.add_argument("--alpha", type=_rational)
        p.add_argument("--beta", type=_rational)
        if name == "reconstruct":
            p.add_argument("--deg-num", type=_nonneg, default=12)
            p.add_argument("--deg-den", type=_nonneg, default=12)
            common(p, ("json", "plain"))
        else:
            common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + sorted(ALIASES) + ["all"])
    p.add_argument("--Hmax", type=_nonneg)
    p.add_argument("--nmax", type=_nonneg)
    p.add_argument("--Lmax", type=_nonneg)
    p.add_argument("--umax", type=_nonneg)
    p.add_argument("--order", type=_nonneg)
    p.add_argument("--guard", type=_nonneg, help="enumeration guard (default: TRILAT_GUARD_LIMIT or 10**7)")
    common(p, ("json", "plain"))
    return parser


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def cmd_count(args) -> int:
    try:
        domain = DomainSpec(args.d, args.L)
        table = count_walks(domain, args.start, args.n, backend=args.backend)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        text = json.dumps(table.to_dict()) + "\n"
    elif args.format == "csv":
        text = _csv(table.csv_rows(), ("n", "p", "q", "count"))
    else:
        lines = [f"d={table.d} L={table.L} start={','.join(map(str, table.start))} n_max={table.n_max}",
                 "totals: " + ", ".join(map(str, table.totals()))]
        lines += [f"n={n} by_p={table.by_p(n)}" for n in range(table.n_max + 1)]
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def _weights(args):
    if args.alpha is None and args.beta is None:
        return None
    if args.alpha is None or args.beta is None:
        raise UsageError("give both --alpha and --beta, or neither for symbolic weights")
    return (args.alpha, args.beta)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.source} needs " + ", ".join("--" + n for n in missing))


def build_series(args, order: int, weights) -> dict[str, TruncSeries]:
    src = args.source
    if src in ("line-total", "line-boundary") or (src == "kernel-root" and args.model == "line"):
        if weights is not None:
            raise UsageError("the line model carries no alpha, beta weights")
    if src == "line-total":
        _need(args, "u", "v")
        return {"G(1,1)": formulas.line_total_gf(args.u, args.v, order)}
    if src == "line-boundary":
        _need(args, "u", "v")
        b = formulas.line_boundary_gfs(args.u, args.v, order)
        return {"G(1,0)": b.g10, "G(0,1)": b.g01}
    if src == "triangle-total":
        _need(args, "u", "v", "w")
        return {"G(1,1,1)": formulas.triangle_total_gf(args.u, args.v, args.w, order, weights)}
    if src == "corner":
        _need(args, "L")
        return {"G(1,1,1)": formulas.corner_gf(args.L, order, weights)}
    if src == "centre-side":
        _need(args, "u")
        return {"G(1,1,0)": formulas.centre_side_gf(args.u, order, weights)}
    if src == "cf-convergent":
        _need(args, "L")
        return {"F": contfrac.convergent_series(contfrac.CFSpec(args.L), order, weights)}
    if src == "kernel-root":
        _need(args, "model")
        if args.model == "line":
            return {"p": solve_kernel_root("line", order, INT)}
        ring, w = formulas.weights_ring(weights)
        return {"p": solve_kernel_root("triangle", order, ring, w)}
    raise UsageError(f"unknown series {src!r}")


def cmd_series(args) -> int:
    order = 10 if args.order is None else args.order
    series = build_series(args, order, _weights(args))
    if args.format == "json":
        if len(series) == 1:
            payload = next(iter(series.values())).to_dict()
        else:
            payload = {k: s.to_dict() for k, s in series.items()}
        text = json.dumps(payload) + "\n"
    elif args.format == "csv":
        rows = []
        for name, s in series.items():
            for n, c in enumerate(s.coeffs):
                if s.ring.name == "bivar":
                    rows += [(name, n, a, b, v) for (a, b), v in sorted(c.terms.items())]
                else:
                    rows.append((name, n, "", "", c))
        text = _csv(rows, ("series", "n", "alpha_exp", "beta_exp", "coeff"))
    else:
        lines = []
        for name, s in series.items():
            body = ", ".join(str(c) for c in s.coeffs)
            lines.append(body if len(series) == 1 else f"{name}: {body}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_reconstruct(args) -> int:
    weights = _weights(args)
    if weights is None and args.source not in ("line-total", "line-boundary") and \
            not (args.source == "kernel-root" and args.model == "line"):
        weights = (1, 1)
    order = args.order if args.order is not None else args.deg_num + args.deg_den + 6
    if order < args.deg_num + args.deg_den + 1:
        raise UsageError(f"--order must be at least deg-num + deg-den + 1 = {args.deg_num + args.deg_den + 1}")
    results = {}
    status = EXIT_OK
    for name, s in build_series(args, order, weights).items():
        try:
            rf = pade_reconstruct(s.to_ring(RAT), args.deg_num, args.deg_den)
            results[name] = rf.to_dict() | {"expression": str(rf)}
        except ReconstructionError as exc:
            results[name] = {"error": str(exc)}
            status = EXIT_FAIL
    if args.format == "json":
        text = json.dumps(results) + "\n"
    else:
        lines = []
        for name, r in results.items():
            if "error" in r:
                lines.append(f"{name}: no exact match ({r['error']})")
            else:
                lines.append(f"{name} = {r['expression']}  degrees ({r['deg_num']}, {r['deg_den']})")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return status


def cmd_verify(args) -> int:
    params = {k: getattr(args, k) for k in ("Hmax", "nmax", "Lmax", "umax", "order", "guard")}
    reports = run_suite(args.suite, **params)
    ok = all(r.passed for r in reports)
    if args.format == "json":
        text = json.dumps({"suite": args.suite, "status": "pass" if ok else "fail",
                           "reports": [r.to_dict() for r in reports]}) + "\n"
    else:
        lines = [str(r) for r in reports]
        lines.append(f"{args.suite}: {sum(r.passed for r in reports)}/{len(reports)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"count": cmd_count, "series": cmd_series, "reconstruct": cmd_reconstruct, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, DomainError, PreconditionError) as exc:
        print(f"trilat: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"trilat: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
