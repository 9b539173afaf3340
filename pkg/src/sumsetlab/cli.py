"""Command-line front end.

Subcommands:

    sumset      one sumset of an explicit subset
    side        the arithmetic side functions (v, vpm, u, uhat, vhat, ...)
    quantity    one extremal quantity by exhaustive search
    construct   build a named set and optionally verify its claims
    verify      check a registry theorem against brute force over a range
    conjecture  sweep a conjecture over its grid
    table       recompute a named table (CSV on stdout)
    fixtures    diff all named tables against their committed fixtures

Exit codes: 0 success, 1 usage error, 2 search budget exceeded,
3 fixture or verification mismatch.
"""

import argparse
import json
import sys
import time

from . import constructions, oracle, sides, tables
from .groups import Subset, group, normalize_factors, parse_group_string
from .search import (DEFAULT_BUDGET, BudgetExceededError, QuantityQuery,
                     enumerate_extremal, evaluate)
from .sumsets import format_terms, parse_lambda, parse_terms, sumset_mask

USAGE_ERROR, BUDGET_ERROR, MISMATCH_ERROR = 1, 2, 3


def _group_arg(text):
    try:
        return group(*normalize_factors(parse_group_string(text)))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _terms_arg(text):
    try:
        return parse_terms(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _lambda_arg(text):
    try:
        return parse_lambda(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(args, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        import csv as _csv
        writer = _csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(payload.keys())
        writer.writerow([_flat(v) for v in payload.values()])
    else:
        for key, value in payload.items():
            print(f"{key}: {_flat(value)}")


def _flat(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return value


def cmd_sumset(args):
    members = [int(tok) for tok in args.set.split(",") if tok != ""]
    A = Subset(args.group, members)
    mask = sumset_mask(args.group, A.indices, args.lam, args.terms)
    result = sorted(Subset(args.group, mask=mask).indices)
    _emit(args, {"group": str(args.group), "set": sorted(A.indices),
                 "lambda": args.lam, "terms": format_terms(args.terms),
                 "sumset": result, "size": len(result)})
    return 0


def cmd_side(args):
    name = args.function
    n, m, h, g, s = args.n, args.m, args.h, args.g, args.s
    if name == "v":
        value = sides.v(n, h, g if g is not None else 1, check=args.check)
        witness = sides.v_witness_divisor(n, h, g if g is not None else 1)
    elif name == "vpm":
        value = sides.v_pm(n, h)
        witness = sides.v_pm_witness_divisor(n, h)
    elif name == "u":
        value = sides.u(n, m, h)
        witness = sides.u_witness_divisor(n, m, h)
    elif name == "uhat":
        value = sides.u_hat(n, m, h)
        witness = sides.u_hat_witness_divisor(n, m, h)
    elif name == "vhat":
        value, witness = sides.v_hat(n, s), None
    elif name == "vhatpm":
        value, witness = sides.v_hat_pm(n, s), None
    else:
        raise AssertionError(name)
    params = {k: v for k, v in
              (("n", n), ("m", m), ("h", h), ("g", g), ("s", s))
              if v is not None}
    _emit(args, {"function": name, "params": params, "value": value,
                 "witness_divisor": witness})
    return 0


FAMILIES = {"nu", "rho", "phi", "sigma", "chi", "tau", "mu"}
VARIANTS = {"plain": "N0", "signed": "Z", "restricted": "01",
            "restricted-signed": "pm1"}


def cmd_quantity(args):
    lam = VARIANTS[args.variant]
    query = QuantityQuery(args.family, args.group, lam, args.terms,
                          m=args.m, k=args.k, l=args.l,
                          exclude_zero=args.exclude_zero,
                          generating_only=args.generating_only)
    t0 = time.perf_counter()
    res = evaluate(query, budget=args.budget)
    elapsed_ms = round(1000 * (time.perf_counter() - t0), 3)
    payload = {"family": args.family, "group": str(args.group),
               "lambda": lam, "terms": format_terms(args.terms),
               "value": res.value, "exhaustive": res.exhaustive,
               "nodes": res.nodes, "elapsed_ms": elapsed_ms}
    if args.m is not None:
        payload["m"] = args.m
    if args.k is not None:
        payload["k"], payload["l"] = args.k, args.l
    if args.witnesses:
        witnesses = enumerate_extremal(args.group, query, budget=args.budget)
        payload["witnesses"] = [sorted(w.indices) for w in witnesses]
    elif res.witness is not None:
        payload["witness"] = sorted(res.witness.indices)
    _emit(args, payload)
    return 0


def cmd_construct(args):
    params = {}
    for token in (args.params.split(",") if args.params else []):
        key, _, value = token.partition("=")
        params[key.strip()] = int(value)
    A, claims = constructions.named_set(args.kind, **params)
    payload = {"kind": args.kind, "group": str(A.group),
               "set": sorted(A.indices), "size": len(A)}
    if args.verify:
        results = [(list(c), constructions.check_claim(A, c)) for c in claims]
        payload["claims"] = [{"claim": c, "holds": ok} for c, ok in results]
        if not all(ok for _c, ok in results):
            _emit(args, payload)
            return MISMATCH_ERROR
    _emit(args, payload)
    return 0


def cmd_verify(args):
    """Compare a registry theorem against brute force over a group range."""
    failures = 0
    checked = 0
    for n in range(args.min_n, args.max_n + 1):
        from .groups import abelian_groups_of_order
        for G in abelian_groups_of_order(n):
            for query in _theorem_queries(args.theorem, G, args):
                matches = [m for m in oracle.known_value(query)
                           if m.citation == args.theorem]
                if not matches:
                    continue
                checked += 1
                res = evaluate(query, budget=args.budget)
                ok = res.value == matches[0].value
                if not ok:
                    failures += 1
                print(json.dumps({
                    "theorem": args.theorem, "group": str(G),
                    "params": matches[0].applicability,
                    "predicted": matches[0].value, "computed": res.value,
                    "status": "ok" if ok else "MISMATCH"}, sort_keys=True))
    print(json.dumps({"theorem": args.theorem, "checked": checked,
                      "failures": failures}, sort_keys=True))
    return MISMATCH_ERROR if failures else 0


def _theorem_queries(theorem, G, args):
    """Candidate queries a theorem might speak about, scaled to the group."""
    n = G.n
    out = []
    for h in range(1, min(args.max_h, n) + 1):
        for lam in ("N0", "Z", "01", "pm1"):
            out.append(QuantityQuery("chi", G, lam, ("exact", h)))
            out.append(QuantityQuery("tau", G, lam, ("exact", h)))
            out.append(QuantityQuery("tau", G, lam, ("from1", h)))
            out.append(QuantityQuery("phi", G, lam, ("exact", h)))
            out.append(QuantityQuery("phi", G, lam, ("upto", h)))
            out.append(QuantityQuery("sigma", G, lam, ("exact", h)))
            out.append(QuantityQuery("chi", G, lam, ("upto", h),
                                     generating_only=True))
            for m in range(1, n + 1):
                out.append(QuantityQuery("rho", G, lam, ("exact", h), m=m))
                out.append(QuantityQuery("rho", G, lam, ("upto", h), m=m))
        out.append(QuantityQuery("tau", G, "01", ("exact", n)))
        out.append(QuantityQuery("tau", G, "pm1", ("exact", n)))
    for k in range(2, 5):
        for l in range(0, k):
            out.append(QuantityQuery("mu", G, "N0", ("exact", k), k=k, l=l))
            out.append(QuantityQuery("mu", G, "01", ("exact", k), k=k, l=l))
    out.append(QuantityQuery("chi", G, "01", ("allpos",), exclude_zero=True))
    out.append(QuantityQuery("tau", G, "01", ("allpos",)))
    out.append(QuantityQuery("tau", G, "pm1", ("allpos",)))
    return out


def cmd_conjecture(args):
    grid = {}
    if args.n:
        grid["n"] = _parse_range(args.n)
    if args.m:
        grid["m"] = _parse_range(args.m)
    if args.h:
        grid["h"] = _parse_range(args.h)
    if args.s:
        grid["s"] = _parse_range(args.s)
    if args.k:
        grid["k"] = _parse_range(args.k)
    report = oracle.conjecture_check(args.id, grid, budget=args.budget)
    for point in report.points:
        print(json.dumps({"conjecture": args.id, "params": point.params,
                          "predicted": _flat_json(point.predicted),
                          "computed": _flat_json(point.computed),
                          "status": point.status,
                          "witness": point.witness}, sort_keys=True))
    refuted = report.refuted
    print(json.dumps({"conjecture": args.id, "points": len(report.points),
                      "refuted": len(refuted)}, sort_keys=True))
    return MISMATCH_ERROR if refuted else 0


def _flat_json(value):
    if isinstance(value, (int, str, type(None))):
        return value
    return str(value)


def _parse_range(text):
    if ".." in text:
        lo, hi = text.split("..")
        return range(int(lo), int(hi) + 1)
    return range(int(text), int(text) + 1)


def cmd_table(args):
    header, rows = tables.compute_table(args.name)
    sys.stdout.write(tables.rows_to_csv(header, rows))
    return 0


def cmd_fixtures(args):
    names = list(tables.TABLES) if args.all else args.name
    if not names:
        print("fixtures: give table names or --all", file=sys.stderr)
        return USAGE_ERROR
    bad = 0
    for name in names:
        t0 = time.perf_counter()
        diff = tables.verify_table(name)
        elapsed = time.perf_counter() - t0
        if diff is None:
            print(f"ok       {name}  ({elapsed:.2f}s)")
        else:
            bad += 1
            print(f"MISMATCH {diff}  ({elapsed:.2f}s)")
    return MISMATCH_ERROR if bad else 0


def build_parser():
    import os
    parser = argparse.ArgumentParser(
        prog="sumsetlab",
        description="exact sumset computations in finite abelian groups")
    # flags fall back to SUMSETLAB_* environment variables
    parser.add_argument("--format", choices=("text", "json", "csv"),
                        default=os.environ.get("SUMSETLAB_FORMAT", "text"))
    parser.add_argument("--budget", type=int,
                        default=int(os.environ.get("SUMSETLAB_BUDGET",
                                                   DEFAULT_BUDGET)),
                        help="search node budget")
    parser.add_argument("--threads", type=int,
                        default=int(os.environ.get("SUMSETLAB_THREADS", 1)),
                        help="reserved; searches are deterministic")
    parser.add_argument("--seed", type=int, default=None,
                        help="reserved; exact search ignores it")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sumset", help="sumset of an explicit subset")
    p.add_argument("--group", type=_group_arg, required=True)
    p.add_argument("--set", required=True,
                   help="comma-separated canonical indices")
    p.add_argument("--lambda", dest="lam", type=_lambda_arg, default="N0")
    p.add_argument("--terms", type=_terms_arg, required=True)
    p.set_defaults(func=cmd_sumset)

    p = sub.add_parser("side", help="arithmetic side functions")
    p.add_argument("function",
                   choices=("v", "vpm", "u", "uhat", "vhat", "vhatpm"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--h", type=int)
    p.add_argument("--g", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--check", action="store_true",
                   help="assert the accelerated path against the definition")
    p.set_defaults(func=cmd_side)

    p = sub.add_parser("quantity", help="extremal quantity by search")
    p.add_argument("--family", choices=sorted(FAMILIES), required=True)
    p.add_argument("--variant", choices=sorted(VARIANTS), default="plain")
    p.add_argument("--group", type=_group_arg, required=True)
    p.add_argument("--terms", type=_terms_arg, default=("exact", 2))
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--exclude-zero", action="store_true")
    p.add_argument("--generating-only", action="store_true")
    p.add_argument("--witnesses", action="store_true",
                   help="enumerate all extremal witnesses")
    p.set_defaults(func=cmd_quantity)

    p = sub.add_parser("construct", help="build a named set")
    p.add_argument("--kind", choices=sorted(constructions.NAMED_SETS),
                   required=True)
    p.add_argument("--params", default="",
                   help="comma-separated key=value integers")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="check a theorem against brute force")
    p.add_argument("--theorem", required=True)
    p.add_argument("--min-n", type=int, default=2)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-h", type=int, default=4)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="sweep a conjecture")
    p.add_argument("--id", choices=sorted(oracle.CONJECTURES), required=True)
    p.add_argument("--n")
    p.add_argument("--m")
    p.add_argument("--h")
    p.add_argument("--s")
    p.add_argument("--k")
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("table", help="recompute a named table as CSV")
    p.add_argument("--name", choices=sorted(tables.TABLES), required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("fixtures", help="diff tables against fixtures")
    p.add_argument("--all", action="store_true")
    p.add_argument("--name", nargs="*", default=[])
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE_ERROR if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return BUDGET_ERROR
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
