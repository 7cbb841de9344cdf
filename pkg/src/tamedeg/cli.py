"""Command-line interface.

Subcommands: decide, scan, bracket, su-check, reduce, semigroup, mdeg,
compose, verify-example.  Exit codes: 0 success, 1 domain error
(precondition failure, failed verification), 2 usage or parse error.
Results go to stdout, diagnostics to stderr, and identical invocations
produce byte-identical output.

Polynomial arguments longer than 200 characters must come from files
(pass paths and the --file flag); a polynomial file holds one
expression, possibly wrapped over several lines, with `#` comments.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from . import automorphisms, decision, parsing, poisson, reduction, semigroup, verify
from .automorphisms import PolyMap
from .polynomials import Polynomial

INLINE_LIMIT = 200


def _read_text(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _polynomial_argument(parser: argparse.ArgumentParser, raw: str, names, from_file: bool) -> Polynomial:
    if from_file:
        text = " ".join(line for _, line in parsing.significant_lines(_read_text(raw)))
        if not text:
            raise parsing.ParseError(f"no polynomial found in {raw!r}", 1, 1)
        return parsing.parse_polynomial(text, names)
    if len(raw) > INLINE_LIMIT:
        parser.error(f"inline polynomial longer than {INLINE_LIMIT} characters; pass a file and --file")
    return parsing.parse_polynomial(raw, names)


def _vars_argument(raw: str) -> tuple[str, ...]:
    return parsing.validate_names([s.strip() for s in raw.split(",")])


def _scan_workers() -> int | None:
    raw = os.environ.get("TAME_MDEG_THREADS")
    if raw is None:
        return os.cpu_count()
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"TAME_MDEG_THREADS must be an integer, got {raw!r}") from exc
    return max(1, value)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")


def _finite(value: int | float) -> int | None:
    # Degrees are ints except for the zero polynomial's -infinity.
    return value if isinstance(value, int) else None


# ---- subcommand handlers ----


def _cmd_decide(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    triple = decision.normalize_triple([args.d1, args.d2, args.d3])
    result = decision.decide(triple)
    witness_text = None
    if result.witness is not None:
        witness_text = automorphisms.format_word_file(result.witness, ("x", "y", "z"))
    if args.json:
        payload = {
            "triple": list(result.triple),
            "verdict": result.verdict,
            "reason": result.reason,
            "representation": list(result.representation) if result.representation else None,
            "witness_len": len(result.witness) if result.witness is not None else None,
            "failed_hypotheses": list(result.failed_hypotheses),
        }
        if args.witness:
            payload["witness"] = witness_text
        print(json.dumps(payload))
        return 0
    print(f"triple: {result.triple}")
    print(f"verdict: {result.verdict}")
    print(f"reason: {result.reason}")
    if result.representation is not None:
        s, t = result.representation
        print(f"representation: d3 = {s}*d1 + {t}*d2")
    if result.witness is not None:
        print(f"witness: {len(result.witness)} steps")
    for line in result.failed_hypotheses:
        print(f"unmet: {line}")
    if args.witness:
        if witness_text is None:
            print("witness: none recorded for this verdict")
        else:
            print(witness_text, end="")
    return 0


def _cmd_scan(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rows = decision.scan_rows(decision.scan(args.max, workers=_scan_workers()))
    if args.format == "json":
        text = json.dumps(rows)
    else:
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        header = ["d1", "d2", "d3", "verdict", "reason", "s", "t", "witness_len"]
        writer.writerow(header)
        for row in rows:
            writer.writerow(["" if row[key] is None else row[key] for key in header])
        text = buffer.getvalue().rstrip("\n")
    _emit(text, args.out)
    return 0


def _cmd_bracket(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    names = _vars_argument(args.vars)
    f = _polynomial_argument(parser, args.f, names, args.file)
    g = _polynomial_argument(parser, args.g, names, args.file)
    bracket = poisson.poisson_bracket(f, g)
    text = poisson.format_bracket(bracket, names)
    degree = _finite(bracket.degree())
    if args.json:
        coefficients = {
            f"[{names[i]},{names[j]}]": parsing.format_polynomial(coeff, names)
            for (i, j), coeff in bracket.items()
        }
        print(json.dumps({"bracket": text, "coefficients": coefficients, "degree": degree}))
    else:
        print(text)
        print(f"degree: {bracket.degree()}")
    return 0


def _cmd_su_check(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    names = _vars_argument(args.vars)
    f = _polynomial_argument(parser, args.f, names, args.file)
    g = _polynomial_argument(parser, args.g, names, args.file)
    big_g = _polynomial_argument(parser, args.G, ("u", "v"), args.file)
    report = poisson.su_bound(f, g, big_g)
    payload = {
        "p": report.p,
        "q": report.q,
        "r": report.r,
        "bracket_degree": report.bracket_degree,
        "lhs_degree": _finite(report.lhs_degree),
        "rhs_bound": report.rhs_bound,
        "holds": report.holds,
    }
    if args.json:
        print(json.dumps(payload))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")
    return 0


def _cmd_reduce(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    polys, names = parsing.parse_map_file(_read_text(args.mapfile))
    pmap = PolyMap(tuple(polys))
    if args.target is not None:
        if not 1 <= args.target <= pmap.arity:
            raise ValueError(f"target must be in 1..{pmap.arity}, got {args.target}")
        found = reduction.find_elementary_reduction(pmap, args.target - 1, args.cap)
        target = args.target if found is not None else None
    else:
        hit = reduction.find_any_reduction(pmap, args.cap)
        target, found = (hit[0] + 1, hit[1]) if hit is not None else (None, None)
    if found is None:
        payload = {"found": False, "target": target, "g": None, "residual": None,
                   "residual_degree": None}
    else:
        payload = {
            "found": True,
            "target": target,
            "g": parsing.format_polynomial(found.g, ("u", "v")),
            "residual": parsing.format_polynomial(found.residual, names),
            "residual_degree": found.residual_degree,
        }
    print(json.dumps(payload))
    return 0


def _cmd_semigroup(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    rep = semigroup.membership(args.l, args.a, args.b)
    try:
        frob = semigroup.frobenius(args.a, args.b)
    except ValueError:
        frob = None
    payload = {
        "member": rep is not None,
        "s": rep[0] if rep else None,
        "t": rep[1] if rep else None,
        "frobenius": frob,
    }
    print(json.dumps(payload))
    return 0


def _cmd_mdeg(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    polys, _ = parsing.parse_map_file(_read_text(args.mapfile))
    degrees = PolyMap(tuple(polys)).mdeg()
    if args.json:
        print(json.dumps({"mdeg": [_finite(d) for d in degrees]}))
    else:
        print("(" + ", ".join(str(d) for d in degrees) + ")")
    return 0


def _cmd_compose(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    steps, names = automorphisms.parse_word_file(_read_text(args.wordfile))
    pmap = automorphisms.compose_word(steps, arity=len(names))
    if args.json:
        print(json.dumps({
            "vars": list(names),
            "components": [parsing.format_polynomial(c, names) for c in pmap.components],
            "mdeg": [_finite(d) for d in pmap.mdeg()],
        }))
    else:
        print(parsing.format_map_file(pmap.components, names), end="")
        print(f"# mdeg: {pmap.mdeg()}")
    return 0


def _cmd_verify_example(parser: argparse.ArgumentParser, args: argparse.Namespace) -> int:
    report = verify.verify_example()
    if args.json:
        print(json.dumps({
            "passed": report.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "expected": c.expected, "computed": c.computed}
                for c in report.checks
            ],
        }))
    else:
        for c in report.checks:
            if c.passed:
                print(f"PASS {c.name}: {c.computed}")
            else:
                print(f"FAIL {c.name}: expected {c.expected}, computed {c.computed}")
        total = len(report.checks)
        failed = len(report.failures())
        print(f"{total - failed}/{total} checks passed")
    return 0 if report.passed else 1


# ---- parser wiring ----


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tamedeg",
        description="Exact computations around multidegrees of tame automorphisms of 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decide", help="classify a degree triple")
    p.add_argument("d1", type=int)
    p.add_argument("d2", type=int)
    p.add_argument("d3", type=int)
    p.add_argument("--witness", action="store_true", help="print the witness word when one exists")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("scan", help="decide every sorted triple with d3 <= max")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.set_defaults(handler=_cmd_scan)

    p = sub.add_parser("bracket", help="Poisson bracket of two polynomials")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--vars", default="x,y,z")
    p.add_argument("--file", action="store_true", help="treat f and g as file paths")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_bracket)

    p = sub.add_parser("su-check", help="degree lower bound for G(f, g) on a weakened pair")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("G", help="bivariate polynomial in u (for f) and v (for g)")
    p.add_argument("--vars", default="x,y,z")
    p.add_argument("--file", action="store_true", help="treat f, g and G as file paths")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_su_check)

    p = sub.add_parser("reduce", help="search for an elementary reduction of a map")
    p.add_argument("mapfile")
    p.add_argument("--target", type=int, help="1-based component to reduce (default: try 3, 2, 1)")
    p.add_argument("--cap", type=int, help="support degree cap (default: 2 * target degree)")
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("semigroup", help="membership of l in the semigroup of (a, b)")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("l", type=int)
    p.set_defaults(handler=_cmd_semigroup)

    p = sub.add_parser("mdeg", help="multidegree of a map file")
    p.add_argument("mapfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_mdeg)

    p = sub.add_parser("compose", help="compose a word file into an explicit map")
    p.add_argument("wordfile")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("verify-example", help="recheck the degree-(10,23,25) construction")
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify_example)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(parser, args)
    except SystemExit as exc:  # argparse usage errors
        code = exc.code
        return code if isinstance(code, int) else 2
    except parsing.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def app() -> None:
    sys.exit(main())


if __name__ == "__main__":
    app()
