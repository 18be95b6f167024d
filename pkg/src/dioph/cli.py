"""Command line front end.

Subcommands: verify, classify, extend, pell, obstruct.  Every command takes
--output text|json; JSON is emitted canonically (sorted keys, two-space
indent, integers only) so that parse + re-render is byte-identical.

Exit codes: 0 pass/extended, 1 property fails, 2 usage or invalid input,
3 certified non-extendable, 4 inconclusive below the search bounds.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .extension import (
    VERDICT_BOUNDED,
    VERDICT_CERTIFIED,
    VERDICT_EXTENDED,
    ModularCertificate,
    SearchReport,
    brute_force_search,
    find_certificate,
    search_and_certify,
)
from .pell import PellClass, PellProblem, fundamental_solution, solve_general, unit_sequence
from .tuples import DiophTuple, is_regular, mod4_quadruple_obstruction, verify
from .arith import legendre

__all__ = ["main"]

_EXIT_BY_VERDICT = {VERDICT_EXTENDED: 0, VERDICT_CERTIFIED: 3, VERDICT_BOUNDED: 4}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dioph",
        description="Diophantine tuples with a shift: verify, classify, extend, certify.",
    )
    sub = parser.add_subparsers(required=True)

    p = sub.add_parser("verify", help="check every pairwise condition of a set")
    _add_set_args(p)
    _add_output_arg(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("classify", help="regular or irregular, for a triple")
    _add_set_args(p)
    _add_output_arg(p)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("extend", help="search for a fourth element, certify if none")
    _add_set_args(p)
    p.add_argument("--bound-index", type=int, default=30,
                   help="unit multiplications to walk per solution class (default 30)")
    p.add_argument("--max-m", type=int, default=10**6,
                   help="ceiling for the brute-force strategy (default 1000000)")
    p.add_argument("--max-modulus", type=int, default=10**5,
                   help="largest modulus tried for a certificate (default 100000)")
    p.add_argument("--strategy", choices=["pell", "brute"], default="pell")
    _add_output_arg(p)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("pell", help="fundamental solution and solution classes")
    p.add_argument("--d", type=int, required=True, help="non-square D >= 2")
    p.add_argument("--n", type=int, default=1, help="right-hand side N (default 1)")
    p.add_argument("--count", type=int, default=5,
                   help="solutions to list per class (default 5)")
    _add_output_arg(p)
    p.set_defaults(func=_cmd_pell)

    p = sub.add_parser("obstruct", help="residue obstructions for a shift k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prime", type=int, required=True, help="odd prime modulus")
    _add_output_arg(p)
    p.set_defaults(func=_cmd_obstruct)

    return parser


def _add_set_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--set", required=True, metavar="A,B,...",
                   help="comma-separated distinct positive integers")
    p.add_argument("--k", type=int, required=True, help="nonzero shift")


def _add_output_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--output", choices=["text", "json"], default="text")


def _parse_tuple(args: argparse.Namespace) -> DiophTuple:
    try:
        elements = tuple(int(part) for part in args.set.split(","))
    except ValueError:
        raise ValueError(f"cannot parse --set {args.set!r} as integers") from None
    return DiophTuple(elements, args.k)


def _canonical_json(payload: dict) -> str:
    return json.dumps(payload, indent=2, sort_keys=True)


def _cmd_verify(args: argparse.Namespace) -> int:
    t = _parse_tuple(args)
    report = verify(t)
    if args.output == "json":
        payload = {
            "set": list(t.elements),
            "k": t.k,
            "verdict": "pass" if report.ok else "fail",
            "pairs": [
                {"a": p.a, "b": p.b, "product": p.product,
                 "shifted": p.shifted, "root": p.root}
                for p in report.pairs
            ],
        }
        print(_canonical_json(payload))
    else:
        print(str(t))
        for p in report.pairs:
            if p.ok:
                print(f"  {p.a}*{p.b}{t.k:+d} = {p.shifted} = {p.root}^2")
            else:
                print(f"  {p.a}*{p.b}{t.k:+d} = {p.shifted}: not a square")
        print(f"property D({t.k}): {'holds' if report.ok else 'fails'}")
    return 0 if report.ok else 1


def _cmd_classify(args: argparse.Namespace) -> int:
    t = _parse_tuple(args)
    regular = is_regular(t)
    verdict = "regular" if regular else "irregular"
    if args.output == "json":
        print(_canonical_json({"set": list(t.elements), "k": t.k, "verdict": verdict}))
    else:
        a, b, c = t.elements
        print(f"{t}: ({c}-{b}-{a})^2 = {(c - b - a) ** 2}, "
              f"4*({a}*{b}{t.k:+d}) = {4 * (a * b + t.k)}")
        print(verdict)
    return 0 if regular else 1


def _cmd_extend(args: argparse.Namespace) -> int:
    t = _parse_tuple(args)
    if args.strategy == "brute":
        report = brute_force_search(t, args.max_m)
        if report.verdict != VERDICT_EXTENDED:
            cert = find_certificate(t, args.max_modulus)
            if cert is not None:
                report = replace(report, certificate=cert)
    else:
        report = search_and_certify(t, args.bound_index, args.max_modulus)
    if args.output == "json":
        print(_canonical_json(_report_payload(report)))
    else:
        _print_report(report)
    return _EXIT_BY_VERDICT[report.verdict]


def _report_payload(report: SearchReport) -> dict:
    t = report.triple
    payload = {
        "set": list(t.elements),
        "k": t.k,
        "strategy": report.strategy,
        "bound": report.bound,
        "verdict": report.verdict,
        "self_hits": list(report.self_hits),
        "candidates": [
            {
                "m": c.m,
                "complete": c.complete,
                "witnesses": {str(w.element): w.root for w in c.witnesses},
            }
            for c in report.candidates
        ],
        "certificate": _certificate_payload(report.certificate),
    }
    return payload


def _certificate_payload(cert: ModularCertificate | None) -> dict | None:
    if cert is None:
        return None
    return {
        "modulus": cert.modulus,
        "allowed_residues": {
            str(e): sorted(res) for e, res in cert.allowed_residues.items()
        },
    }


def _print_report(report: SearchReport) -> None:
    t = report.triple
    print(str(t))
    bound_kind = "unit-index" if report.strategy == "pell_sequence" else "m"
    print(f"strategy {report.strategy}, {bound_kind} bound {report.bound}")
    for c in report.candidates:
        roots = ", ".join(f"{w.element}->{w.root}" for w in c.witnesses)
        status = "extends the triple" if c.complete else "fails the third condition"
        print(f"  m={c.m}: roots {roots}; {status}")
    if report.self_hits:
        print(f"  self-hits (m already in the set): {', '.join(map(str, report.self_hits))}")
    if report.certificate is not None:
        cert = report.certificate
        print(f"certificate: modulus {cert.modulus}")
        for e in t.elements:
            allowed = ", ".join(map(str, sorted(cert.allowed_residues[e])))
            print(f"  m mod {cert.modulus} allowed by {e}: {{{allowed}}}")
        print("  intersection: empty")
    print(f"verdict: {report.verdict}")


def _cmd_pell(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ValueError("--count must be >= 1")
    fund = fundamental_solution(args.d)
    coefficient = 2 * fund.x
    payload = {
        "d": args.d,
        "n": args.n,
        "fundamental": {"x": fund.x, "y": fund.y},
        "coefficient": coefficient,
    }
    if args.n == 1:
        sols = unit_sequence(args.d, args.count)
        payload["solutions"] = [[s.x, s.y] for s in sols]
        classes = None
    else:
        classes = solve_general(PellProblem(args.d, args.n))
        payload["classes"] = [
            {
                "base": [cls.base.x, cls.base.y],
                "x_sign": cls.x_sign,
                "members": [[s.x, s.y] for s in _first_members(cls, args.count)],
            }
            for cls in classes
        ]
    if args.output == "json":
        print(_canonical_json(payload))
        return 0
    print(f"x^2 - {args.d}*y^2 = {args.n}")
    print(f"fundamental solution of the unit equation: ({fund.x}, {fund.y}); "
          f"recurrence coefficient {coefficient}")
    if classes is None:
        for s in payload["solutions"]:
            print(f"  ({s[0]}, {s[1]})")
    elif not classes:
        print("  no solutions")
    else:
        for cls in payload["classes"]:
            sign = "-" if cls["x_sign"] < 0 else ""
            print(f"  class with base ({sign}{cls['base'][0]}, {cls['base'][1]}):")
            for x, y in cls["members"]:
                print(f"    ({x}, {y})")
    return 0


def _first_members(cls: PellClass, count: int) -> list:
    # a walk of count+4 unit steps always covers the first `count`
    # nonnegative members
    found = set()
    for u, v in cls.members(count + 4):
        if u >= 0 and v >= 0:
            found.add((u, v))
        if u <= 0 and v <= 0:
            found.add((-u, -v))
    from .pell import PellSolution

    return [PellSolution(x, y) for x, y in sorted(found)[:count]]


def _cmd_obstruct(args: argparse.Namespace) -> int:
    symbol = legendre(args.k, args.prime)
    excluded = symbol == -1
    quadruple = mod4_quadruple_obstruction(args.k)
    if args.output == "json":
        payload = {
            "k": args.k,
            "prime": args.prime,
            "legendre": symbol,
            "multiples_excluded": excluded,
            "quadruple_obstruction_mod4": quadruple,
        }
        print(_canonical_json(payload))
    else:
        print(f"({args.k}/{args.prime}) = {symbol}")
        if excluded:
            print(f"multiples of {args.prime} are excluded from every D({args.k}) set")
        else:
            print(f"no exclusion: multiples of {args.prime} may appear in D({args.k}) sets")
        if quadruple:
            print(f"k={args.k} = 2 (mod 4): no D({args.k}) quadruple exists")
        else:
            print(f"k={args.k} != 2 (mod 4): no mod-4 quadruple obstruction")
    return 0 if excluded else 1


if __name__ == "__main__":
    sys.exit(main())
