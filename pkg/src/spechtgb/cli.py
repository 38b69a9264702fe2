"""Command-line front end.

Exit codes: 0 when every claim passes, 1 on a claim failure, 2 on a usage
error (bad flags, inconsistent parameters, malformed order strings).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .partitions import Filter, Partition
from .poly import MonomialOrder, buchberger, is_groebner, parse_field
from .poly.polynomial import Polynomial
from .specht import FAMILIES, IdealSpec, delta_m, generators
from .suite import SuiteError, default_suite, load_suite, run_suite, write_csv, write_jsonl
from .tableaux import HEAD, TAIL, enumerate_standard
from . import verify


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# parsing helpers


def parse_lambda(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise UsageError(f"invalid lambda {text!r}: {exc}") from exc


def parse_frontier(text: str) -> list[list[int]]:
    """``"4,2,1,1;3,3,2"`` -> ``[[4,2,1,1],[3,3,2]]``; empty string is the empty filter."""
    if not text.strip():
        return []
    return [parse_lambda(part).to_json() for part in text.split(";")]


def parse_chain(text: str) -> list[list[int]]:
    """``"1,2;1"`` -> ``[[1,2],[1]]``."""
    try:
        return [[int(t) for t in part.split(",") if t.strip()] for part in text.split(";")]
    except ValueError as exc:
        raise UsageError(f"invalid chain {text!r}") from exc


def check_weight(n: int, l: int, lam: Partition) -> None:
    if lam.weight != n + l - 1:
        raise UsageError(f"lambda = {lam} has weight {lam.weight}, but n + l - 1 = {n + l - 1}")
    if lam.first < l:
        raise UsageError(f"lambda_1 = {lam.first} is below l = {l}")


def build_spec(args) -> IdealSpec:
    fam = args.family
    lam = parse_lambda(args.lam) if args.lam else None
    if lam is not None and fam in ("specht_head", "specht_tail", "mixed"):
        check_weight(args.n, args.l, lam)
    F = None
    if fam in ("specht_filter", "mixed_filter"):
        if args.frontier is not None:
            F = Filter(args.n, args.l, "lower", parse_frontier(args.frontier))
        elif lam is not None:
            check_weight(args.n, args.l, lam)
            F = Filter.below(lam, args.l)
        else:
            raise UsageError(f"{fam} needs --frontier or --lambda")
    Y = parse_chain(args.Y) if args.Y else ()
    variant = TAIL if fam == "specht_tail" else args.variant
    return IdealSpec(fam, args.n, args.l, lam if F is None else None, F, args.m, Y, variant)


def parse_order(text: str | None, n: int) -> MonomialOrder:
    if text is None:
        return MonomialOrder.lex_ascending(n)
    order = MonomialOrder.parse(text)
    if order.n != n:
        raise UsageError(f"order {text!r} is over {order.n} variables, expected {n}")
    return order


def default_threads() -> int:
    env = os.environ.get("SPECHT_GB_THREADS")
    try:
        return max(1, int(env)) if env else 1
    except ValueError:
        return 1


def emit(obj: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, sort_keys=True) + "\n")
    elif fmt == "csv":
        keys = sorted(k for k, v in obj.items() if not isinstance(v, (dict, list)))
        out.write(",".join(keys) + "\n")
        out.write(",".join(str(obj[k]) for k in keys) + "\n")
    else:
        for k in sorted(obj):
            out.write(f"{k}: {obj[k]}\n")


def header(args, **extra) -> dict:
    return {"tool": "spechtgb", "version": __version__, "field": args.field, **extra}


# ---------------------------------------------------------------------------
# commands


def cmd_stab(args, out) -> int:
    lam = parse_lambda(args.lam)
    check_weight(args.n, args.l, lam)
    tabs = enumerate_standard(args.l, lam, args.variant)
    if args.output == "json":
        emit(header(args, count=len(tabs), tableaux=[t.to_json() for t in tabs]), "json", out)
    else:
        out.write(f"count: {len(tabs)}\n")
        for t in tabs:
            out.write(f"{t}\n")
    return 0


def cmd_gens(args, out) -> int:
    spec = build_spec(args)
    fld = parse_field(args.field)
    gens = generators(spec, standard_only=args.standard_only, field=fld)
    if args.output == "json":
        emit(header(args, spec=spec.to_json(), count=len(gens),
                    generators=[g.to_text() for g in gens]), "json", out)
    else:
        out.write(f"count: {len(gens)}\n")
        for g in gens:
            out.write(g.to_text() + "\n")
    return 0


def cmd_gb(args, out) -> int:
    spec = build_spec(args)
    fld = parse_field(args.field)
    order = parse_order(args.order, spec.n)
    gens = generators(spec, standard_only=args.standard_only, field=fld)
    deadline = _deadline(args)
    if args.verify_only:
        rep = is_groebner(gens, order, deadline=deadline)
    else:
        rep = buchberger(gens, order, deadline=deadline, max_degree=args.degree_cap)
    body = header(args, spec=spec.to_json(), **rep.summary())
    body["initial_degrees"] = {str(k): v for k, v in rep.degree_counts().items()}
    body["initial_ideal"] = [verify.monomial_text(m) for m in sorted(rep.initial_ideal())]
    if not args.verify_only:
        body["basis"] = [g.to_text() for g in rep.basis]
    emit(body, args.output, out)
    return 0 if rep.verified else 1


def _deadline(args):
    return time.monotonic() + args.time_cap if args.time_cap else None


def _claim_exit(rep, args, out, **extra) -> int:
    emit(header(args, **extra, **rep.to_json(include_time=args.timing)), args.output, out)
    return 0 if rep.passed else 1


def cmd_verify(args, out) -> int:
    if args.default:
        entries = default_suite(args.max_weight)
    elif args.suite:
        entries = load_suite(args.suite)
    else:
        raise UsageError("verify needs a suite file or --default")
    results = run_suite(entries, threads=args.threads, field=args.field, time_cap=args.time_cap)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            write_jsonl(results, fh, include_time=args.timing)
    else:
        write_jsonl(results, out, include_time=args.timing)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            write_csv(results, fh)
    bad = [r for r in results if not r.ok]
    print(f"{len(results) - len(bad)}/{len(results)} claims as expected", file=sys.stderr)
    return 0 if not bad else 1


def cmd_universal(args, out) -> int:
    lam = parse_lambda(args.lam)
    check_weight(args.n, args.l, lam)
    exhaustive = args.exhaustive and not args.random_only
    if exhaustive and args.n > args.exhaustive_cap:
        raise UsageError(f"n = {args.n} is above the exhaustive cap {args.exhaustive_cap}; "
                         "use --random-only or --no-exhaustive")
    if not exhaustive and args.trials == 0:
        print("warning: no orders requested, the search is vacuous", file=sys.stderr)
    rep = verify.universal_search(args.n, args.l, lam, exhaustive, args.trials, args.seed,
                                  exhaustive_cap=args.exhaustive_cap,
                                  field=parse_field(args.field), deadline=_deadline(args))
    return _claim_exit(rep, args, out, seed=args.seed)


def cmd_codim(args, out) -> int:
    lam = parse_lambda(args.lam)
    check_weight(args.n, args.l, lam)
    rep = verify.check_codimension(args.n, args.l, lam, field=parse_field(args.field),
                                   deadline=_deadline(args))
    return _claim_exit(rep, args, out, order=str(MonomialOrder.lex_ascending(args.n)))


def cmd_radical_witness(args, out) -> int:
    spec = build_spec(args)
    fld = parse_field(args.field)
    order = parse_order(args.order, spec.n)
    if args.delta is not None:
        f = delta_m(args.delta, spec.n).expand(fld)
    elif args.poly:
        f = Polynomial.parse(args.poly, spec.n, fld)
    else:
        rep = verify.radicality_search(spec, order, field=fld, deadline=_deadline(args))
        emit(header(args, order=str(order), **rep.to_json(include_time=args.timing)),
             args.output, out)
        return 0
    rep = verify.check_radicality_witness(spec, f, order, field=fld, deadline=_deadline(args))
    return _claim_exit(rep, args, out, order=str(order))


# ---------------------------------------------------------------------------
# parser


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--field", default="rational", help="rational, prime or prime:p")
    p.add_argument("--threads", type=int, default=default_threads(),
                   help="worker processes (default: $SPECHT_GB_THREADS or 1)")
    p.add_argument("--time-cap", type=float, default=None, help="seconds per claim")
    p.add_argument("--degree-cap", type=int, default=None, help="Buchberger degree cap")
    p.add_argument("--output", choices=("json", "csv", "pretty"), default="pretty")
    p.add_argument("--timing", action="store_true", help="include wall times in reports")


def _shape(p: argparse.ArgumentParser, lam_required: bool = True) -> None:
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--lambda", dest="lam", required=lam_required, help="comma list, e.g. 3,3,1")


def _spec_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", choices=FAMILIES, default="specht_head")
    _shape(p, lam_required=False)
    p.add_argument("--frontier", default=None, help="maximal elements, e.g. 4,2,1,1;3,3,2")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--Y", default=None, help="Li-Li chain, e.g. 1,2;1")
    p.add_argument("--variant", choices=(HEAD, TAIL), default=HEAD)
    p.add_argument("--standard-only", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spechtgb", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"spechtgb {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("stab", help="list standard tableaux")
    _shape(p)
    p.add_argument("--variant", choices=(HEAD, TAIL), default=HEAD)
    _common(p)
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("gens", help="print generators of an ideal")
    _spec_flags(p)
    _common(p)
    p.set_defaults(func=cmd_gens)

    p = sub.add_parser("gb", help="Groebner basis or Groebner check")
    _spec_flags(p)
    p.add_argument("--order", default=None, help="e.g. lex:5,4,3,2,1 (greatest variable first)")
    p.add_argument("--verify-only", action="store_true", help="check the generators as they are")
    _common(p)
    p.set_defaults(func=cmd_gb)

    p = sub.add_parser("verify", help="run a suite of claims")
    p.add_argument("suite", nargs="?", help="JSON suite file")
    p.add_argument("--default", action="store_true", help="run the built-in suite")
    p.add_argument("--max-weight", type=int, default=6)
    p.add_argument("--report", default=None, help="JSON-lines output path (default stdout)")
    p.add_argument("--csv", default=None, help="CSV summary path")
    _common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("universal", help="search monomial orders for a non-Groebner case")
    _shape(p)
    p.add_argument("--exhaustive", dest="exhaustive", action="store_true", default=True)
    p.add_argument("--no-exhaustive", dest="exhaustive", action="store_false")
    p.add_argument("--random-only", action="store_true")
    p.add_argument("--exhaustive-cap", type=int, default=6)
    p.add_argument("--trials", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    _common(p)
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("codim", help="check the codimension formula")
    _shape(p)
    _common(p)
    p.set_defaults(func=cmd_codim)

    p = sub.add_parser("radical-witness", help="certify or search for non-radicality")
    _spec_flags(p)
    p.add_argument("--order", default=None)
    p.add_argument("--delta", type=int, default=None, help="use Delta_m as the candidate")
    p.add_argument("--poly", default=None, help="candidate polynomial, e.g. 'x1*x2 - x3'")
    _common(p)
    p.set_defaults(func=cmd_radical_witness)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.threads < 1 or (args.time_cap is not None and args.time_cap <= 0) or \
                (args.degree_cap is not None and args.degree_cap <= 0):
            raise UsageError("threads and caps must be positive")
        parse_field(args.field)
        return args.func(args, out)
    except (UsageError, SuiteError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TimeoutError:
        print("error: time cap exceeded", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
