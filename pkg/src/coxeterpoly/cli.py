"""Command-line entry point.

Every subcommand is a thin adapter over the library: parse, call, print JSON
with sorted keys on stdout.  Bad input exits with status 2 and a one-line
diagnostic on stderr; a failing verification suite exits with status 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import coxeter, graphs
from .chebyshev import u
from .cyclotomic import cyclo
from .polyring import IntPoly
from .spectra import DEFAULT_TOL, classify_self_reciprocal, largest_real_root_bracket
from .sweep import sweep
from .symmetry import desymmetrize, symmetrize
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _tol(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid tolerance {text!r}") from None
    if tol <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return tol


def _read_poly(arg: str | None, file: str | None) -> IntPoly:
    if (arg is None) == (file is None):
        raise UsageError("give a polynomial as a JSON array or with --file, not both")
    text = Path(file).read_text() if file else arg
    try:
        return IntPoly.from_json(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"malformed polynomial: {exc}") from None


def _weights(tokens: list[str]) -> coxeter.WeightType:
    parts = [x for tok in tokens for x in tok.replace(",", " ").split()]
    try:
        return coxeter.WeightType(tuple(int(x) for x in parts))
    except ValueError as exc:
        raise UsageError(f"invalid weights {' '.join(tokens)!r}: {exc}") from None


def _bracket(iv) -> list[int]:
    lo, hi = iv
    return [lo.numerator, lo.denominator, hi.numerator, hi.denominator]


# subcommands -----------------------------------------------------------------


def cmd_poly(args) -> int:
    op = args.op
    if op in ("cyclo", "chebyshev"):
        try:
            n = int(args.value)
        except (TypeError, ValueError):
            raise UsageError(f"{op} needs an integer index, got {args.value!r}") from None
        if n < (1 if op == "cyclo" else 0):
            raise UsageError(f"{op} index out of range: {n}")
        _emit((cyclo(n) if op == "cyclo" else u(n)).to_json(), args.out)
        return 0
    p = _read_poly(args.value, args.file)
    try:
        if op == "symmetrize":
            text = symmetrize(p).to_json()
        elif op == "desymmetrize":
            text = desymmetrize(p).to_json()
        else:
            text = _dump(classify_self_reciprocal(p, args.tol).to_dict())
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(text, args.out)
    return 0


_KINDS = {
    "star": coxeter.star_coxeter,
    "canonical": coxeter.canonical_coxeter,
    "extended": coxeter.extended_canonical_coxeter,
    "q": coxeter.q_poly,
}


def cmd_coxeter(args) -> int:
    w = _weights(args.weights)
    p = _KINDS[args.kind](w)
    out = {"kind": args.kind, "weights": list(w.weights), "poly": list(p.coeffs)}
    if args.kind == "q":
        # q is not self-reciprocal; report the polynomial it represents
        rep = classify_self_reciprocal(coxeter.extended_canonical_coxeter(w), args.tol)
        out["represents"] = "extended"
    else:
        rep = classify_self_reciprocal(p, args.tol)
    out["report"] = rep.to_dict()
    _emit(_dump(out), args.out)
    return 0


def _build_graph(args) -> graphs.Multigraph:
    if args.file:
        try:
            return graphs.Multigraph.from_json(Path(args.file).read_text())
        except (ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed graph file: {exc}") from None
    if not args.builder:
        raise UsageError("give a builder (path, star, dynkin, kronecker) or --file")
    name, rest = args.builder[0], args.builder[1:]
    try:
        if name == "path":
            return graphs.path(int(rest[0]))
        if name == "star":
            return graphs.star([int(x) for tok in rest for x in tok.replace(",", " ").split()])
        if name == "kronecker":
            return graphs.kronecker_graph(int(rest[0]))
        if name == "dynkin":
            return graphs.dynkin(rest[0], int(rest[1]))
    except (IndexError, ValueError) as exc:
        raise UsageError(f"bad arguments for builder {name!r}: {exc}") from None
    raise UsageError(f"unknown graph builder {name!r}")


def cmd_graph(args) -> int:
    g = _build_graph(args)
    chi = graphs.charpoly(g)
    out = {"n": g.n, "edges": [list(e) for e in g.edges()], "charpoly": list(chi.coeffs)}
    if args.op == "radius":
        if g.n == 0 or not graphs.is_connected(g):
            raise UsageError("spectral radius needs a nonempty connected graph")
        out["radius_bracket"] = _bracket(largest_real_root_bracket(chi, args.tol))
    _emit(_dump(out), args.out)
    return 0


def cmd_verify(args) -> int:
    bounds: dict = {}
    if args.suite in ("representation", "recursion", "interlacing"):
        bounds = {"max_sum": args.max_sum, "max_t": args.max_t, "max_weight": args.max_weight}
        if args.suite == "recursion":
            bounds["form"] = args.form
    elif args.suite == "acampo":
        bounds = {"max_vertices": args.max_vertices}
    elif args.suite == "chebyshev":
        bounds = {"max_n": args.max_n}
    elif args.suite == "kronecker":
        bounds = {"samples": args.samples, "seed": args.seed}
    result = run_suite(args.suite, **bounds)
    _emit(_dump(result.to_dict()), args.out)
    if not result.ok:
        print(f"counterexample: {result.counterexample}", file=sys.stderr)
    return 0 if result.ok else 1


def cmd_sweep(args) -> int:
    report = sweep(args.max_sum, args.max_t, args.tol, args.jobs)
    _emit(report.to_csv() if args.format == "csv" else report.to_json(), args.out)
    return 0


# parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxeterpoly",
        description="Coxeter polynomials, symmetrization and unit-circle classification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", metavar="FILE", help="write output to FILE instead of stdout")
    common.add_argument("--tol", type=_tol, default=DEFAULT_TOL, help="spectral bracket width (default 2^-30)")

    p = sub.add_parser("poly", parents=[common], help="polynomial utilities")
    p.add_argument("op", choices=["symmetrize", "desymmetrize", "cyclo", "chebyshev", "classify"])
    p.add_argument("value", nargs="?", help="JSON coefficient array (ascending) or index N")
    p.add_argument("--file", help="read the JSON coefficient array from a file")
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("coxeter", parents=[common], help="Coxeter polynomial of a weight type")
    p.add_argument("kind", choices=sorted(_KINDS))
    p.add_argument("weights", nargs="+", help="weights, space or comma separated")
    p.set_defaults(func=cmd_coxeter)

    p = sub.add_parser("graph", parents=[common], help="graph characteristic polynomial")
    p.add_argument("op", choices=["charpoly", "radius"])
    p.add_argument("builder", nargs="*", help="path N | star P1 P2 ... | dynkin A|D|E N | kronecker S")
    p.add_argument("--file", help="graph JSON file {\"n\": .., \"edges\": [[i, j, m], ..]}")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--max-sum", type=int, default=24)
    p.add_argument("--max-t", type=int, default=6)
    p.add_argument("--max-weight", type=int, default=8)
    p.add_argument("--max-vertices", type=int, default=10)
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--form", choices=coxeter.RECURSION_FORMS, default="one-point")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="classify f^ over a grid of weight types")
    p.add_argument("--max-sum", type=int, default=12)
    p.add_argument("--max-t", type=int, default=None)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
