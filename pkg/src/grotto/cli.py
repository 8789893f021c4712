"""Batch command-line front end.

Commands:
  class <file>        class of a constraint variety in the line format
  repvar              representation-variety class for a group and genus
  parabolic           rank-2 parabolic classes from tag lists
  tqft                emit a pipeline matrix or tensor
  epoly <file>        E-polynomial (q = u*v) of a variety file
  verify [--full]     run the verification suite

`GROTTO_THREADS` (or --threads) sets the process fan-out for the heavy
computations.  Output is deterministic for fixed inputs and options.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

from . import tqft
from .classring import ClassPoly, NotPolynomial, e_polynomial
from .groups import group as get_group
from .groups import strata, StrataClassMismatch
from .poly import ParseError
from .variety import DepthExceeded, Engine, Unresolvable, load_variety


def _poly_output(value: ClassPoly, fmt: str, stats=None) -> str:
    if fmt == "factored":
        return value.factored_str()
    if fmt == "e-poly":
        return str(e_polynomial(value))
    if fmt == "json":
        doc = {"class": {"coeffs": [str(c) for c in value.coeffs]}}
        if stats is not None:
            doc["stats"] = stats
        return json.dumps(doc, sort_keys=True)
    return str(value)


def cmd_class(args) -> int:
    X = load_variety(args.file)
    engine = Engine(split_degree_bound=args.split_bound, max_depth=args.max_depth)
    result = engine.class_of(X)
    print(_poly_output(result.value, args.format, stats=result.stats.as_dict()))
    return 0


def cmd_repvar(args) -> int:
    g = get_group(args.group)
    value = tqft.rep_variety_class(g, args.genus, threads=args.threads)
    print(_poly_output(value, args.format))
    return 0


def cmd_parabolic(args) -> int:
    jordan = [Fraction(t) for t in args.jordan.split(",")] if args.jordan else []
    pairs = []
    if args.m:
        for chunk in args.m.split(","):
            mu, _, sg = chunk.partition(":")
            if not sg:
                raise ParseError(f"two-eigenvalue tag {chunk!r} must look like mu:sigma")
            pairs.append((Fraction(mu), Fraction(sg)))
    value = tqft.u2_parabolic_class(args.genus, jordan, pairs)
    print(_poly_output(value, args.format))
    return 0


def cmd_tqft(args) -> int:
    g = get_group(args.group)
    if args.emit == "zpi":
        print(tqft.z_pi_L(g, threads=args.threads))
    elif args.emit == "eta":
        print(tqft.eta(g))
    elif args.emit == "ztilde":
        print(tqft.reduced_L(g, threads=args.threads))
    elif args.emit == "f":
        tensor = tqft.f_tensor(g, threads=args.threads)
        labels = tqft.basis_labels(g)
        for j, lj in enumerate(labels):
            for k, lk in enumerate(labels):
                row = ", ".join(tensor[i][j][k].factored_str() for i in range(len(labels)))
                print(f"F[.][{lj}][{lk}]: {row}")
    return 0


def cmd_epoly(args) -> int:
    X = load_variety(args.file)
    engine = Engine(split_degree_bound=args.split_bound, max_depth=args.max_depth)
    result = engine.class_of(X)
    print(str(e_polynomial(result.value)))
    return 0


def cmd_verify(args) -> int:
    from .verify import run_checks

    failures = run_checks(full=args.full, threads=args.threads, out=sys.stdout)
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grotto", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_engine=False, with_threads=False):
        if with_engine:
            p.add_argument("--split-bound", type=int, default=6, help="product-split degree bound")
            p.add_argument("--max-depth", type=int, default=10000, help="recursion budget")
        if with_threads:
            p.add_argument("--threads", type=int, default=None, help="worker processes")

    p = sub.add_parser("class", help="class of a constraint variety file")
    p.add_argument("file")
    p.add_argument("--format", choices=["expanded", "factored", "json"], default="expanded")
    common(p, with_engine=True)
    p.set_defaults(func=cmd_class)

    p = sub.add_parser("repvar", help="representation-variety class")
    p.add_argument("--group", required=True, choices=["u2", "u3", "u4"])
    p.add_argument("--genus", required=True, type=int)
    p.add_argument("--format", choices=["expanded", "factored", "e-poly", "json"], default="expanded")
    common(p, with_threads=True)
    p.set_defaults(func=cmd_repvar)

    p = sub.add_parser("parabolic", help="rank-2 parabolic class")
    p.add_argument("--genus", required=True, type=int)
    p.add_argument("--jordan", default="", help="comma-separated nonzero rational tags")
    p.add_argument("--m", default="", help="comma-separated mu:sigma rational pairs")
    p.add_argument("--format", choices=["expanded", "factored", "e-poly", "json"], default="expanded")
    p.set_defaults(func=cmd_parabolic)

    p = sub.add_parser("tqft", help="emit a transfer matrix or tensor")
    p.add_argument("--group", required=True, choices=["u2", "u3", "u4"])
    p.add_argument("--emit", required=True, choices=["zpi", "eta", "ztilde", "f"])
    common(p, with_threads=True)
    p.set_defaults(func=cmd_tqft)

    p = sub.add_parser("epoly", help="E-polynomial of a variety file")
    p.add_argument("file")
    common(p, with_engine=True)
    p.set_defaults(func=cmd_epoly)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--full", action="store_true", help="include the heavy rank-4 recomputations")
    common(p, with_threads=True)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (Unresolvable, DepthExceeded, NotPolynomial, StrataClassMismatch, tqft.NotLocalized) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
