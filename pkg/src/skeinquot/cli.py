"""Command-line front end.

Exit status: 0 success, 1 a computed negative answer ("not a member",
failing verification), 2 usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .exprparse import ExprError, parse_poly
from .generators import family
from .quotient import classify, membership, normal_form, normal_form_localized, torsion_split
from .ringcore import skein_to_obj
from .verify import VerifyConfig, run_structure_suite, run_suite

GEN_FAMILIES = ("G", "J", "Q", "U", "F", "sigma", "W")


def _expr_text(arg: str) -> str:
    return sys.stdin.read() if arg == "-" else arg


def _emit(obj) -> None:
    print(json.dumps(obj, separators=(",", ":")))


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skeinquot",
        description="Normal forms, membership and torsion in R[x1,x2,y]/G.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True, metavar="COMMAND")

    def with_expr(name, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("expr", help="expression, or '-' to read standard input")
        sp.add_argument("--json", action="store_true", help="JSON on standard output")
        return sp

    nf = with_expr("nf", "canonical normal form")
    nf.add_argument("--cert", action="store_true", help="also print the certificate")
    with_expr("member", "membership in G with certificate")
    with_expr("classify", "Zero | Torsion | HasFreePart")
    with_expr("split", "torsion coordinates and J-reduced free residue")
    with_expr("nf-loc", "normal form after inverting all {n}")

    gen = sub.add_parser("gen", help="print a generator-family element")
    gen.add_argument("family", choices=GEN_FAMILIES)
    gen.add_argument("n", type=int)
    gen.add_argument("--json", action="store_true")

    ver = sub.add_parser("verify", help="run the identity and structure suites")
    d = VerifyConfig()
    ver.add_argument("--max-n", type=int, default=d.max_n)
    ver.add_argument("--seed", type=int, default=d.seed)
    ver.add_argument("--cases", type=int, default=d.cases)
    ver.add_argument("--degree-bound", type=int, default=d.degree_bound)
    ver.add_argument("--json", action="store_true")
    return ap


def main(argv: Optional[List[str]] = None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        if args.cmd == "verify":
            return _verify(args)
        if args.cmd == "gen":
            p = family(args.family, args.n)
            _emit(skein_to_obj(p)) if args.json else print(p)
            return 0
        p = parse_poly(_expr_text(args.expr))
    except (ExprError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.cmd == "nf":
        form = normal_form(p)
        if args.json:
            obj = {"rep": skein_to_obj(form.rep)}
            if args.cert:
                obj.update(form.cert.to_obj())
            _emit(obj)
        else:
            print(form.rep)
            if args.cert:
                print(f"cert: {form.cert}")
        return 0
    if args.cmd == "member":
        cert = membership(p)
        if cert is None:
            _emit({"member": False}) if args.json else print("not a member")
            return 1
        if args.json:
            _emit({"member": True, **cert.to_obj()})
        else:
            print(f"member; cert: {cert}")
        return 0
    if args.cmd == "classify":
        c = classify(p)
        _emit({"class": c.value}) if args.json else print(c)
        return 0
    if args.cmd == "split":
        s = torsion_split(p)
        _emit(s.to_obj()) if args.json else print(s)
        return 0
    if args.cmd == "nf-loc":
        loc = normal_form_localized(p)
        _emit(loc.to_obj()) if args.json else print(loc)
        return 0
    raise AssertionError(args.cmd)  # pragma: no cover


def _verify(args) -> int:
    report = run_suite(args.max_n) + run_structure_suite(args.seed, args.cases, args.degree_bound)
    if args.json:
        _emit(report.to_obj())
    else:
        print(report.summary())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
