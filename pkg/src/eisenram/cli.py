"""Command-line front end.

Exit codes: 0 success, 2 invalid input, 3 insufficient precision,
4 domain errors (not Galois, not constructible, ...), 1 anything else.
"""
from __future__ import annotations

import argparse
import json
import sys

from .census import census_report
from .errors import DomainError, EisenramError, InsufficientPrecision, InvalidInput, ParseError
from .extension import EisensteinPoly, default_digits, make_eisenstein
from .identity import decide, decide_with_oracle, tbreak_check
from .metric import distance_E, distance_P
from .norm_graded import graded_norm
from .padic import check_prime, format_poly, format_val
from .ramification import ramification_data, to_serre

EXIT_CODES = {InvalidInput: 2, InsufficientPrecision: 3, DomainError: 4}


def parse_poly(text: str) -> tuple:
    """Parse an integer polynomial in x, e.g. ``"x^2+4x-2"`` -> ``(-2, 4, 1)``."""
    toks = [(i, ch) for i, ch in enumerate(text) if not ch.isspace()]
    pos = 0
    coeffs = {}

    def peek():
        return toks[pos][1] if pos < len(toks) else None

    def where():
        return toks[pos][0] if pos < len(toks) else len(text)

    def number():
        nonlocal pos
        start = pos
        while peek() is not None and peek().isdigit():
            # digits of one literal must be adjacent in the source
            if pos > start and toks[pos][0] != toks[pos - 1][0] + 1:
                raise ParseError("whitespace inside an integer", toks[pos][0])
            pos += 1
        if pos == start:
            raise ParseError("expected an integer", where())
        return int("".join(ch for _, ch in toks[start:pos]))

    if not toks:
        raise ParseError("empty polynomial", 0)
    first = True
    while pos < len(toks):
        sign = 1
        if peek() in "+-":
            sign = -1 if peek() == "-" else 1
            pos += 1
        elif not first:
            raise ParseError(f"unexpected {peek()!r}", where())
        first = False
        if peek() is None:
            raise ParseError("dangling sign", where())
        coef = 1
        if peek().isdigit():
            coef = number()
            if peek() == "*":
                pos += 1
                if peek() != "x":
                    raise ParseError("expected 'x' after '*'", where())
        if peek() == "x":
            pos += 1
            power = 1
            if peek() == "^":
                pos += 1
                power = number()
        elif peek() is not None and peek() not in "+-":
            raise ParseError(f"unexpected {peek()!r}", where())
        else:
            power = 0
            if toks[pos - 1][1] in "+-":
                raise ParseError("expected a term", where())
        coeffs[power] = coeffs.get(power, 0) + sign * coef
    degree = max(coeffs)
    poly = [0] * (degree + 1)
    for k, c in coeffs.items():
        poly[k] = c
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _eisenstein(text: str, p: int) -> EisensteinPoly:
    return make_eisenstein(parse_poly(text), p)


def _emit(args, payload, plain=None):
    if args.json or plain is None:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(plain)


def cmd_distance(args, digits):
    if args.metric == "P":
        d = distance_P(parse_poly(args.f), parse_poly(args.g), args.p)
    else:
        d = distance_E(_eisenstein(args.f, args.p), _eisenstein(args.g, args.p))
    _emit(args, {"distance": format_val(d), "metric": args.metric}, format_val(d))


def ram_json(f: EisensteinPoly, digits=None) -> dict:
    rd = ramification_data(f, digits)
    sd = to_serre(rd)
    return {
        "e": f.e,
        "galois": True,
        "fontaine": {
            "i_breaks": [format_val(t) for t in rd.i_breaks],
            "u_breaks": [format_val(u) for u in rd.u_breaks],
            "i_break": format_val(rd.i_break),
            "u_break": format_val(rd.u_break),
            "i_multiset": [format_val(t) for t in rd.i_multiset],
            "phi_vertices": [[format_val(x), format_val(y)] for x, y in rd.phi_vertices],
        },
        "serre": {
            "lower_breaks": [format_val(b) for b in sd.lower_breaks],
            "upper_breaks": [format_val(b) for b in sd.upper_breaks],
        },
        "filtration": [[format_val(t), n] for t, n in rd.filtration_steps()],
    }


def cmd_ram(args, digits):
    _emit(args, ram_json(_eisenstein(args.f, args.p), digits))


def cmd_decide(args, digits):
    f, g = _eisenstein(args.f, args.p), _eisenstein(args.g, args.p)
    outcome = decide(f, g, digits)
    if args.oracle:
        outcome = decide_with_oracle(f, g, digits)
    _emit(args, outcome.to_json())


def cmd_tbreak(args, digits):
    _emit(args, tbreak_check(_eisenstein(args.f, args.p), digits).to_json())


def cmd_normmap(args, digits):
    t = graded_norm(_eisenstein(args.f, args.p), args.n, digits)
    _emit(args, t.to_json())


def cmd_census(args, digits):
    report = census_report(args.p, args.e, args.B, args.prec)
    if args.json:
        _emit(args, report)
        return
    lines = ["rep\tsize\tgalois\tu_break\tdisc_val"]
    for c in report["classes"]:
        rep = format_poly(tuple(c["rep"]) + (1,))
        lines.append(f"{rep}\t{c['size']}\t{str(c['galois']).lower()}\t{c['u_break'] or '-'}\t{c['disc_val']}")
    lines.append(f"# class_count={report['class_count']} stable_at_B={report['stable_at_B']}")
    print("\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-p", type=int, required=True, help="base prime")
    common.add_argument("--prec", type=int, default=None, help="working precision in p-adic digits (default 32*e)")
    common.add_argument("--json", action="store_true", help="JSON output, including errors")

    parser = argparse.ArgumentParser(prog="eisenram", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("distance", parents=[common], help="distance between two polynomials")
    s.add_argument("-f", required=True)
    s.add_argument("-g", required=True)
    s.add_argument("--metric", choices=["E", "P"], default="E", help="E: Eisenstein metric, P: v_p(Res)")
    s.set_defaults(run=cmd_distance)

    s = sub.add_parser("ram", parents=[common], help="ramification invariants")
    s.add_argument("-f", required=True)
    s.set_defaults(run=cmd_ram)

    s = sub.add_parser("decide", parents=[common], help="same extension?")
    s.add_argument("-f", required=True)
    s.add_argument("-g", required=True)
    s.add_argument("--oracle", action="store_true", help="settle the verdict by root finding")
    s.set_defaults(run=cmd_decide)

    s = sub.add_parser("tbreak", parents=[common], help="test the criterion exactly at the break")
    s.add_argument("-f", required=True)
    s.set_defaults(run=cmd_tbreak)

    s = sub.add_parser("normmap", parents=[common], help="graded norm map at level n")
    s.add_argument("-f", required=True)
    s.add_argument("-n", type=int, required=True)
    s.set_defaults(run=cmd_normmap)

    s = sub.add_parser("census", parents=[common], help="classify all Eisenstein polynomials in a box")
    s.add_argument("-e", type=int, required=True)
    s.add_argument("-B", type=int, required=True)
    s.set_defaults(run=cmd_census)
    return parser


def _exit_code(exc) -> int:
    for cls, code in EXIT_CODES.items():
        if isinstance(exc, cls):
            return code
    return 1


def _report_error(args, exc) -> int:
    kind = getattr(exc, "kind", type(exc).__name__)
    if args.json:
        print(json.dumps({"error": str(exc), "kind": kind}, sort_keys=True))
    else:
        print(f"error: {kind}: {exc}", file=sys.stderr)
    return _exit_code(exc)


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        check_prime(args.p)
        if args.prec is not None and args.prec < 1:
            raise InvalidInput("--prec must be positive")
        digits = args.prec
        try:
            args.run(args, digits)
        except InsufficientPrecision:
            if getattr(args, "f", None) is None:
                raise
            base = digits or default_digits(len(parse_poly(args.f)) - 1)
            args.run(args, 2 * base)
    except EisenramError as exc:
        return _report_error(args, exc)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
