"""Command-line front end.

Exit codes: 0 success, 1 a mathematical precondition failed (not generic,
degenerate sum, non-critical vertex), 2 bad input, 3 internal consistency
error.
"""

import argparse
import json
import sys
from math import factorial

from . import systemfile
from ._exact import det
from .coefficients import coefficient_table
from .engine import SystemInstance, count_solutions, eliminant, signed_determinant_sum, solution_sum
from .errors import ConsistencyError, DegenerateSum, InputError, ParseError, PreconditionError
from .geometry import genericity, minkowski_sum, newton_polytope
from .oracle import mixed_volume_oracle
from .systemfile import format_rational

fmt = format_rational


def _load(args):
    return systemfile.load(args.file)


def _poly_arg(text, sf, name):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{name}: {exc.msg}", f"column {exc.colno}") from None
    return systemfile.parse_poly(data, sf.n, name)


def _point_arg(text, n):
    try:
        pt = tuple(int(x) for x in text.strip("()[] ").split(","))
    except ValueError:
        raise ParseError(f"cannot parse vertex {text!r}") from None
    if len(pt) != n:
        raise ParseError(f"vertex {text!r} has length {len(pt)}, expected {n}")
    return pt


def cmd_check(args, out):
    sf = _load(args)
    try:
        sc = minkowski_sum([newton_polytope(f) for f in sf.polys])
    except DegenerateSum as exc:
        print(f"DEGENERATE {exc}", file=out)
        return 1
    ok, witness = genericity(sc)
    if ok:
        print("GENERIC", file=out)
        return 0
    print(f"NOT_GENERIC witness={list(witness)}", file=out)
    return 1


def cmd_coefficients(args, out):
    sf = _load(args)
    sc = minkowski_sum([newton_polytope(f) for f in sf.polys])
    table = coefficient_table(sc)
    rows = []
    for a in sc.vertices:
        summands = sc.decomposition(a)
        rows.append({
            "vertex": list(a),
            "summands": [list(s) for s in summands],
            "coefficient": table[a],
            "det": fmt(det(summands)),
        })
    print(json.dumps(rows, indent=2), file=out)
    return 0


def cmd_mixed_volume(args, out):
    sf = _load(args)
    polys = [newton_polytope(f) for f in sf.polys]
    sc = minkowski_sum(polys)
    nfv = signed_determinant_sum(sc, coefficient_table(sc))
    v = nfv / factorial(sf.n)
    print(f"V = {fmt(v)}", file=out)
    print(f"n!V = {fmt(nfv)}", file=out)
    if args.verify:
        ov = mixed_volume_oracle(polys)
        print(f"oracle V = {fmt(ov)}", file=out)
        print("AGREE" if ov == v else "DISAGREE", file=out)
        if ov != v:
            return 3
    return 0


def cmd_sum(args, out):
    sf = _load(args)
    q = _poly_arg(args.q, sf, "--q")
    inst = SystemInstance(sf.polys)
    if args.trace:
        for a in inst.vertices:
            print(
                f"vertex {list(a)} c={inst.coeffs[a]} residue={fmt(inst.residue(q, a))}",
                file=out,
            )
    print(fmt(solution_sum(q, inst)), file=out)
    return 0


def cmd_count(args, out):
    sf = _load(args)
    print(count_solutions(SystemInstance(sf.polys)), file=out)
    return 0


def cmd_residue(args, out):
    sf = _load(args)
    q = _poly_arg(args.q, sf, "--q")
    inst = SystemInstance(sf.polys)
    a = _point_arg(args.vertex, sf.n)
    if a not in inst.vertices:
        raise ParseError(f"{list(a)} is not a vertex of the Minkowski sum")
    print(fmt(inst.residue(q, a)), file=out)
    return 0


def cmd_eliminate(args, out):
    sf = _load(args)
    i = sf.index(args.var)
    e = eliminant(SystemInstance(sf.polys), i)
    payload = {
        "variable": args.var,
        "degree": e.degree,
        "coefficients": [fmt(c) for c in e.coefficients],
    }
    text = json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    print(e.pretty(args.var), file=out)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gkresidue",
        description="Residue-formula computations for sparse Laurent systems in generic position.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = subs.add_parser(name, help=help)
        p.add_argument("file", help="system file (JSON)")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "test generic relative position")
    add("coefficients", cmd_coefficients, "combinatorial coefficient table")
    p = add("mixed-volume", cmd_mixed_volume, "mixed volume of the Newton polytopes")
    p.add_argument("--verify", action="store_true", help="compare with the polarization oracle")
    p = add("sum", cmd_sum, "sum of a polynomial over all solutions")
    p.add_argument("--q", required=True, help="JSON term list, or a constant")
    p.add_argument("--trace", action="store_true", help="print per-vertex residues")
    add("count", cmd_count, "number of solutions with multiplicity")
    p = add("residue", cmd_residue, "residue at one vertex of the sum")
    p.add_argument("--vertex", required=True, help="comma separated coordinates")
    p.add_argument("--q", default="1", help="JSON term list, or a constant")
    p = add("eliminate", cmd_eliminate, "univariate eliminant for one variable")
    p.add_argument("--var", required=True)
    p.add_argument("--out", help="write the eliminant JSON here")
    return parser


def main(argv=None, out=None):
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
