"""Command-line driver.

Exit codes: 0 all requested checks pass, 1 at least one mismatch,
2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import bailey, recognizer, registry
from .errors import QBaileyError
from .hypergeom import (DEFAULT_ASSIGNMENTS, INFINITY, TRANSFORM_IDS,
                        parse_monomial, transform_needs_n, transform_symbols,
                        verify_transformation)
from .qseries import QSeries


def _default_order() -> str:
    return os.environ.get("QBAILEY_ORDER", "60")


def _default_registry():
    return os.environ.get("QBAILEY_REGISTRY") or None


def _order(text) -> Fraction:
    try:
        v = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad order {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qbailey",
        description="Exact verification of Rogers-Ramanujan type identities, "
                    "Bailey pairs, and q-hypergeometric transformations.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, order=True):
        if order:
            p.add_argument("--order", type=_order, default=None,
                           help="truncation order (rational, default 60)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--registry", default=None, help="registry file path")

    p = sub.add_parser("verify-all", help="verify every registry identity")
    common(p)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("verify-identity", help="verify one identity by id")
    p.add_argument("id")
    common(p)

    p = sub.add_parser("verify-pair", help="check a closed beta formula")
    p.add_argument("id")
    p.add_argument("--a", action="append", default=None,
                   help="a specialization (repeatable; default standard set)")
    p.add_argument("--n-max", type=int, default=10)
    common(p)

    p = sub.add_parser("verify-transform", help="check a transformation formula")
    p.add_argument("id", choices=sorted(TRANSFORM_IDS))
    p.add_argument("--assign", action="append", default=[],
                   metavar="SYM=MONOMIAL")
    p.add_argument("--n", type=int, default=None)
    common(p)

    p = sub.add_parser("lemma", help="evaluate both Bailey lemma sides")
    p.add_argument("dek", help="d,e,k triple, e.g. 1,2,3")
    p.add_argument("--a", default="1")
    p.add_argument("--rho1", default="inf")
    p.add_argument("--rho2", default="inf")
    p.add_argument("--N", default="inf")
    common(p)

    p = sub.add_parser("expand", help="print series for an identity side")
    p.add_argument("id")
    p.add_argument("--side", choices=("lhs", "rhs", "both"), default="both")
    common(p)

    p = sub.add_parser("recognize", help="sieve Euler exponents from a series dump")
    p.add_argument("--input", default=None, help="JSON series dump (default stdin)")
    p.add_argument("--max-period", type=int, default=64)
    common(p)

    p = sub.add_parser("list", help="list identities, pairs, or transforms")
    p.add_argument("what", choices=("identities", "pairs", "transforms"))
    p.add_argument("--registry", default=None)
    return ap


def _load(args) -> list[registry.IdentitySpec]:
    path = args.registry if getattr(args, "registry", None) else _default_registry()
    return registry.load_registry(path)


def _emit(args, payload, text_lines):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, indent=1, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _report_lines(reports):
    lines = []
    for r in reports:
        if r.status == "pass":
            lines.append(f"PASS  {r.id}  (order {r.order}, {r.millis} ms)")
        elif r.status == "fail":
            v = r.first_mismatch
            lines.append(f"FAIL  {r.id}  first mismatch at q^{v.exponent}: "
                         f"lhs {v.left} vs rhs {v.right}")
        else:
            lines.append(f"ERROR {r.id}  {r.message}")
    return lines


def cmd_verify_all(args) -> int:
    order = args.order if args.order is not None else Fraction(_default_order())
    idents = _load(args)
    reports = registry.verify_all(idents, order, threads=args.threads)
    passed = sum(1 for r in reports if r.status == "pass")
    payload = {"order": str(order), "total": len(reports), "passed": passed,
               "failed": len(reports) - passed,
               "entries": [r.to_json() for r in reports]}
    lines = _report_lines(reports)
    lines.append(f"{passed}/{len(reports)} identities verified to order q^{order}")
    _emit(args, payload, lines)
    return 0 if passed == len(reports) else 1


def cmd_verify_identity(args) -> int:
    order = args.order if args.order is not None else Fraction(_default_order())
    idents = {e.id: e for e in _load(args)}
    if args.id not in idents:
        print(f"unknown identity {args.id!r}; see `qbailey list identities`",
              file=sys.stderr)
        return 2
    rep = registry.verify_identity(idents[args.id], order)
    _emit(args, {"order": str(order), "entries": [rep.to_json()]},
          _report_lines([rep]))
    return 0 if rep.status == "pass" else 1


def cmd_verify_pair(args) -> int:
    order = args.order if args.order is not None else Fraction(40)
    if args.id not in bailey.pair_ids():
        print(f"unknown pair {args.id!r}; see `qbailey list pairs`", file=sys.stderr)
        return 2
    a_specs = args.a if args.a else list(bailey.STANDARD_A_SPECS)
    rep = bailey.verify_pair(args.id, a_specs, args.n_max, order)
    entries = [{"a": a, "n": n, "status": "pass" if v.equal else "fail"}
               for a, n, v in rep.results]
    lines = []
    for a, n, v in rep.results:
        if not v.equal:
            lines.append(f"FAIL  {args.id} a={a} n={n}: mismatch at q^{v.exponent}")
    lines.append(f"{'PASS' if rep.passed else 'FAIL'}  {args.id} over "
                 f"a in {{{', '.join(a_specs)}}}, n <= {args.n_max}, order q^{order}")
    _emit(args, {"id": args.id, "order": str(order),
                 "passed": rep.passed, "entries": entries}, lines)
    return 0 if rep.passed else 1


def cmd_verify_transform(args) -> int:
    order = args.order if args.order is not None else Fraction(40)
    symbols = transform_symbols(args.id)
    cases = []
    if args.assign:
        asg = {}
        for item in args.assign:
            if "=" not in item:
                print(f"bad --assign {item!r}, expected SYM=MONOMIAL", file=sys.stderr)
                return 2
            k, v = item.split("=", 1)
            if k not in symbols:
                print(f"{args.id} has no symbol {k!r} (expects {symbols})",
                      file=sys.stderr)
                return 2
            asg[k] = v
        missing = [s for s in symbols if s not in asg]
        if missing:
            print(f"missing assignments for {missing}", file=sys.stderr)
            return 2
        if transform_needs_n(args.id) and args.n is None:
            print(f"{args.id} needs --n", file=sys.stderr)
            return 2
        cases.append((asg, args.n))
    else:
        cases = DEFAULT_ASSIGNMENTS[args.id]

    entries = []
    ok = True
    for asg_text, n in cases:
        asg = {k: parse_monomial(v) for k, v in asg_text.items()}
        v = verify_transformation(args.id, asg, n, order)
        ok = ok and v.equal
        entries.append({"assignment": asg_text, "n": n,
                        "status": "pass" if v.equal else "fail"})
    lines = [f"{'PASS' if e['status'] == 'pass' else 'FAIL'}  {args.id} "
             f"{e['assignment']} n={e['n']}" for e in entries]
    _emit(args, {"id": args.id, "order": str(order), "entries": entries}, lines)
    return 0 if ok else 1


def cmd_lemma(args) -> int:
    order = args.order if args.order is not None else Fraction(40)
    try:
        d, e, k = (int(v) for v in args.dek.split(","))
    except ValueError:
        print(f"bad triple {args.dek!r}, expected d,e,k", file=sys.stderr)
        return 2
    a = parse_monomial(args.a)
    rho1 = parse_monomial(args.rho1)
    rho2 = parse_monomial(args.rho2)
    N = INFINITY if args.N in ("inf", "INF") else int(args.N)
    spec = bailey.LemmaSpec(rho1=rho1, rho2=rho2, N=N, order=order)
    lhs, rhs = bailey.lemma_sides((d, e, k), a, spec)
    t = min(lhs.order, rhs.order, order)
    v = lhs.equal_to_order(rhs, t)
    lines = [f"lhs = {lhs.truncated(t)}", f"rhs = {rhs.truncated(t)}",
             f"{'EQUAL' if v.equal else 'MISMATCH'} to order q^{t}"]
    _emit(args, {"dek": [d, e, k], "a": args.a, "order": str(t),
                 "equal": v.equal, "lhs": lhs.truncated(t).dump(),
                 "rhs": rhs.truncated(t).dump()}, lines)
    return 0 if v.equal else 1


def cmd_expand(args) -> int:
    order = args.order if args.order is not None else Fraction(20)
    idents = {e.id: e for e in _load(args)}
    if args.id not in idents:
        print(f"unknown identity {args.id!r}", file=sys.stderr)
        return 2
    e = idents[args.id]
    payload = {"id": e.id, "order": str(order)}
    lines = []
    if args.side in ("lhs", "both"):
        s = registry.eval_lhs(e, order)
        payload["lhs"] = s.dump()
        lines.append(f"lhs = {s}")
    if args.side in ("rhs", "both"):
        s = registry.eval_rhs(e, order)
        payload["rhs"] = s.dump()
        lines.append(f"rhs = {s}")
    _emit(args, payload, lines)
    return 0


def cmd_recognize(args) -> int:
    order = args.order if args.order is not None else Fraction(_default_order())
    try:
        raw = open(args.input).read() if args.input else sys.stdin.read()
        series = QSeries.load(json.loads(raw))
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"cannot read series dump: {exc}", file=sys.stderr)
        return 2
    t_int = int(order)
    res = recognizer.product_exponents(series, t_int)
    fit = recognizer.periodicity_fit(res.exponents, args.max_period)
    payload = {"rescale": str(res.rescale), "exponents": res.exponents,
               "period": fit[0] if fit else None,
               "pattern": list(fit[1]) if fit else None}
    lines = [f"rescale: q -> q^{res.rescale}" if res.rescale != 1 else "rescale: none",
             f"euler exponents c_1..c_{t_int-1}: {res.exponents}",
             f"period: {fit[0]} pattern {list(fit[1])}" if fit else "period: none"]
    _emit(args, payload, lines)
    return 0


def cmd_list(args) -> int:
    if args.what == "identities":
        for e in _load(args):
            extra = f"  [{e.meta.get('attribution')}]" if e.meta.get("attribution") else ""
            print(f"{e.id:12s} (d,e,k)={tuple(e.meta.get('dek', ()))} "
                  f"a={e.meta.get('a', '?')}{extra}")
    elif args.what == "pairs":
        for pid in bailey.pair_ids():
            print(f"{pid:8s} (d,e,k)={bailey.pair_triple(pid)}")
    else:
        for tid in sorted(TRANSFORM_IDS):
            print(f"{tid:8s} symbols={transform_symbols(tid)}"
                  f"{' terminating via n' if transform_needs_n(tid) else ''}")
    return 0


_COMMANDS = {
    "verify-all": cmd_verify_all,
    "verify-identity": cmd_verify_identity,
    "verify-pair": cmd_verify_pair,
    "verify-transform": cmd_verify_transform,
    "lemma": cmd_lemma,
    "expand": cmd_expand,
    "recognize": cmd_recognize,
    "list": cmd_list,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except QBaileyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
