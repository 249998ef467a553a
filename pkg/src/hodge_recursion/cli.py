"""Command line entry point.

    hodge-recursion xi N
    hodge-recursion hodge G L [--poly]
    hodge-recursion psi G n1 n2 ...
    hodge-recursion hurwitz G mu1 mu2 ...
    hodge-recursion table --max-euler N [--format json|csv|text] [--cache PATH]
    hodge-recursion verify {caj|dvv|lambda-g|lambert|cross|dual} [flags]

Exit codes: 0 all checks pass, 1 a check failed, 2 usage error, 3 oracle
budget exceeded.  Configuration comes from flags only.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from typing import List, Optional, Sequence, TextIO

from .dvv import psi_intersection
from .hurwitz import DEFAULT_BUDGET, OracleInfeasible, hurwitz_closed_form, hurwitz_oracle
from .partitions import partition
from .recursion import HodgeEngine, elsv_evaluate, keys_up_to, stable
from .suites import (
    cumulative_table,
    suite_caj,
    suite_cross,
    suite_dual,
    suite_dvv,
    suite_lambda_g,
    suite_lambert,
)
from .xi import xi

log = logging.getLogger("hodge_recursion")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=1)


def _budget(s: str) -> int:
    v = int(s)
    if v < 1000:
        raise argparse.ArgumentTypeError("budget must be >= 1000")
    return v


def _max_euler(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("max-euler must be >= 1")
    return v


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return v


def _floats(s: str) -> List[float]:
    try:
        return [float(p) for p in s.split(",") if p.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hodge-recursion", description="Linear Hodge integrals and Hurwitz numbers, exactly.")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("xi", help="the polynomial xi_N(t)")
    s.add_argument("n", type=_nonneg)
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("hodge", help="Hodge integrals of one stable (g, l)")
    s.add_argument("g", type=_nonneg)
    s.add_argument("ell", type=int)
    s.add_argument("--poly", action="store_true", help="also print the raw polynomial")
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.add_argument("--cache")

    s = sub.add_parser("psi", help="psi-class intersection number")
    s.add_argument("g", type=_nonneg)
    s.add_argument("n", type=_nonneg, nargs="+")
    s.add_argument("--format", choices=["text", "json"], default="text")

    s = sub.add_parser("hurwitz", help="simple Hurwitz number h_{g,mu}")
    s.add_argument("g", type=_nonneg)
    s.add_argument("mu", type=int, nargs="+")
    s.add_argument("--method", choices=["oracle", "closed", "elsv"], default="oracle")
    s.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--cache")

    s = sub.add_parser("table", help="every Hodge integral up to an Euler characteristic")
    s.add_argument("--max-euler", type=_max_euler, required=True)
    s.add_argument("--format", choices=["text", "json", "csv"], default="text")
    s.add_argument("--cache")

    s = sub.add_parser("verify", help="run a verification sweep")
    s.add_argument("suite", choices=["caj", "dvv", "lambda-g", "lambert", "cross", "dual"])
    s.add_argument("--gmax", type=_nonneg, default=1)
    s.add_argument("--dmax", type=_nonneg, default=4)
    s.add_argument("--rmax", type=_nonneg, default=None)
    s.add_argument("--lmax", type=_nonneg, default=3)
    s.add_argument("--max-euler", type=_max_euler, default=4)
    s.add_argument("--n-max", type=_nonneg, default=4)
    s.add_argument("--w", type=_floats, default=[0.5, 1.0, 2.0])
    s.add_argument("--budget", type=_budget, default=DEFAULT_BUDGET)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--format", choices=["text", "json"], default=None)
    s.add_argument("--cache")
    return p


def _engine(args) -> HodgeEngine:
    return HodgeEngine(cache_path=getattr(args, "cache", None))


def _finish(engine: HodgeEngine, args):
    if getattr(args, "cache", None) and engine.computed:
        engine.save()
    log.info("recomputed %d keys: %s", len(engine.computed), engine.computed)


def _hodge_label(g: int, ell: int, n, j: int) -> str:
    taus = " ".join(f"tau_{k}" for k in n)
    lam = f" lambda_{j}" if j else ""
    return f"<{taus}{lam}>_{{{g},{ell}}}"


def _rows_out(rows, fmt: str, out: TextIO):
    rows = list(rows)
    if fmt == "json":
        out.write(
            _dump([{"g": g, "ell": ell, "n": list(n), "j": j, "value": str(v)} for g, ell, n, j, v in rows]) + "\n"
        )
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["g", "ell", "n", "j", "value"])
        for g, ell, n, j, v in rows:
            w.writerow([g, ell, " ".join(map(str, n)), j, str(v)])
        out.write(buf.getvalue())
    else:
        for g, ell, n, j, v in rows:
            out.write(f"{_hodge_label(g, ell, n, j)} = {v}\n")


def cmd_xi(args, out: TextIO) -> int:
    p = xi(args.n)
    if args.format == "json":
        out.write(_dump({"n": args.n, "poly": p.to_text(), "terms": p.to_json()}) + "\n")
    else:
        out.write(p.to_text() + "\n")
    return EXIT_OK


def cmd_hodge(args, out: TextIO) -> int:
    if not stable(args.g, args.ell):
        raise UsageError(f"(g,l)=({args.g},{args.ell}) is not stable")
    engine = _engine(args)
    h = engine.H(args.g, args.ell)
    table = cumulative_table(engine, [(args.g, args.ell)])
    rows = list(table.rows())
    if args.format == "json":
        obj = {
            "g": args.g,
            "ell": args.ell,
            "hodge": [{"n": list(n), "j": j, "value": str(v)} for _, _, n, j, v in rows],
        }
        if args.poly:
            obj["poly"] = h.to_text()
        out.write(_dump(obj) + "\n")
    else:
        _rows_out(rows, args.format, out)
        if args.poly:
            out.write(("" if args.format == "text" else "# ") + f"H = {h.to_text()}\n")
    _finish(engine, args)
    return EXIT_OK


def cmd_psi(args, out: TextIO) -> int:
    n = tuple(args.n)
    v = psi_intersection(args.g, n)
    if args.format == "json":
        out.write(_dump({"g": args.g, "n": list(n), "value": str(v)}) + "\n")
    else:
        out.write(f"{v}\n")
    return EXIT_OK


def cmd_hurwitz(args, out: TextIO) -> int:
    try:
        mu = partition(args.mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.method == "closed":
        try:
            val = hurwitz_closed_form(args.g, mu)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.method == "elsv":
        engine = _engine(args)
        table = cumulative_table(engine, [(args.g, len(mu))])
        val = elsv_evaluate(args.g, mu, table)
        _finish(engine, args)
    else:
        try:
            val = hurwitz_oracle(args.g, mu, budget=args.budget, workers=args.workers)
        except OracleInfeasible as exc:
            out.write(_dump({"g": args.g, "mu": list(mu), "error": str(exc)}) + "\n")
            return EXIT_INFEASIBLE
    out.write(_dump(val.to_json()) + "\n")
    return EXIT_OK


def cmd_table(args, out: TextIO) -> int:
    engine = _engine(args)
    t0 = time.perf_counter()
    table = cumulative_table(engine, keys_up_to(args.max_euler))
    log.info("table built in %.2fs", time.perf_counter() - t0)
    _rows_out(table.rows(), args.format, out)
    _finish(engine, args)
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    fmt = args.format or ("json" if args.suite == "lambert" else "text")
    engine = _engine(args)
    if args.suite == "caj":
        res = suite_caj(args.gmax, args.dmax, args.rmax, args.budget, args.workers)
    elif args.suite == "cross":
        res = suite_cross(args.gmax, args.dmax, args.rmax, args.budget, engine)
    elif args.suite == "dvv":
        res = suite_dvv(args.max_euler, engine)
    elif args.suite == "lambda-g":
        if args.gmax < 1:
            raise UsageError("lambda-g needs --gmax >= 1")
        res = suite_lambda_g(args.gmax, max(args.lmax, 1), engine)
    elif args.suite == "dual":
        res = suite_dual(args.max_euler, engine)
    else:
        if not args.w or any(w <= 0 for w in args.w):
            raise UsageError("--w needs positive values")
        res = suite_lambert(args.n_max, args.w)
    if fmt == "json":
        out.write(_dump(res.to_json()) + "\n")
    else:
        for row in res.rows:
            out.write(f"{'PASS' if row.ok else 'FAIL'}  {row.label}\n")
            if not row.ok:
                out.write("      " + json.dumps(row.detail, sort_keys=True) + "\n")
        for label in res.infeasible:
            out.write(f"SKIP  {label}  (oracle budget exceeded)\n")
        n_ok = sum(r.ok for r in res.rows)
        out.write(f"{res.check}: {n_ok}/{len(res.rows)} passed, {len(res.infeasible)} infeasible\n")
    _finish(engine, args)
    return res.exit_code


COMMANDS = {
    "xi": cmd_xi,
    "hodge": cmd_hodge,
    "psi": cmd_psi,
    "hurwitz": cmd_hurwitz,
    "table": cmd_table,
    "verify": cmd_verify,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        err.write(parser.format_usage())
        err.write(f"{exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handler = None
    if args.verbose:
        handler = logging.StreamHandler(err)
        handler.setFormatter(logging.Formatter("%(message)s"))
        log.addHandler(handler)
        log.setLevel(logging.INFO)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    finally:
        if handler is not None:
            log.removeHandler(handler)


def main() -> None:
    sys.exit(run())
