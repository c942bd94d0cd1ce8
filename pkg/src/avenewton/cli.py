"""Command-line front end: ``avenewton {solve,analyze,enumerate,example}``.

Exit codes: 0 success, 1 usage/I-O/parse error, 2 GNM cycle or iteration
limit, 3 singular Jacobian, 4 problem too large.
"""
import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import io
from .diagnostics import Case, classify_ave, matrix_report, singular_case_trichotomy
from .errors import InvalidKind, NotApplicable, TooLarge
from .gnm import Termination, gnm_solve
from .oracle import RHS_KINDS, enumerate_solutions, generate_instance

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NOT_SOLVED = 2
EXIT_SINGULAR = 3
EXIT_TOO_LARGE = 4

TERMINATION_EXIT = {
    Termination.SOLVED_BY_PATTERN_RULE: EXIT_OK,
    Termination.SOLVED_BY_RESIDUAL: EXIT_OK,
    Termination.CYCLE_DETECTED: EXIT_NOT_SOLVED,
    Termination.MAX_ITERATIONS: EXIT_NOT_SOLVED,
    Termination.SINGULAR_JACOBIAN: EXIT_SINGULAR,
}

EXAMPLE_NAMES = {
    "ex32": "ex32",
    "ex37": "ex37",
    "remark43": "remark43",
    "a1-random": "a1_random",
    "a2-random": "a2_random",
    "rho-third-random": "rho_third_random",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # exit code 2 is reserved for "GNM did not converge"
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _fmt(x):
    return "[" + ", ".join(io.format_number(t) for t in x) + "]"


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _load_problem(args):
    A = io.read_matrix(args.matrix)
    b = io.read_vector(args.rhs)
    n = A.shape[0]
    if b.size != n:
        raise UsageError(f"dimension mismatch: matrix {args.matrix} is {n} x {n}, "
                         f"rhs {args.rhs} has {b.size} entries")
    return A, b


def cmd_solve(args):
    A, b = _load_problem(args)
    x0 = None
    if args.x0 is not None:
        x0 = io.read_vector(args.x0)
        if x0.size != A.shape[0]:
            raise UsageError(f"dimension mismatch: matrix {args.matrix} is "
                             f"{A.shape[0]} x {A.shape[0]}, x0 {args.x0} has {x0.size} entries")
    trace = gnm_solve(A, b, x0, max_iter=args.max_iter, tol=args.tol)
    for w in trace.warnings:
        print(f"warning: {w}", file=sys.stderr)
    if args.json:
        _emit_json(trace.to_dict())
    else:
        print(f"termination: {trace.termination.value}")
        print(f"iterations:  {trace.iterations_used}")
        if trace.solution is not None:
            print(f"solution:    {_fmt(trace.solution)}")
        print(f"residual:    {trace.residuals[-1]:.3e}")
    return TERMINATION_EXIT[trace.termination]


def cmd_analyze(args):
    A = io.read_matrix(args.matrix)
    report = matrix_report(A, regularity=args.regularity)
    if args.json:
        _emit_json(report.to_dict())
        return EXIT_OK
    print(f"A - I is a Z-matrix:  {report.is_z_matrix_A_minus_I}")
    print(f"M-class of A - I:     {report.m_class.value}")
    print(f"A - I irreducible:    {report.irreducible}")
    if report.right_null_vector_u is not None:
        print(f"u (right null):       {_fmt(report.right_null_vector_u)}")
        print(f"v (left null):        {_fmt(report.left_null_vector_v)}")
    if report.interval_regular is not None:
        print(f"[A-I, A+I] regular:   {report.interval_regular}")
    for c in report.certificates:
        print(f"{c.name.value:24s} {'holds' if c.holds else 'fails'}  {c.detail}")
    return EXIT_OK


def cmd_enumerate(args):
    A, b = _load_problem(args)
    sols = enumerate_solutions(A, b)
    out = sols.to_dict()
    cert = classify_ave(A)
    if cert.holds and cert.name.value == "A2_IrreducibleSingularM":
        verdict = singular_case_trichotomy(A, b)
        out["trichotomy"] = verdict.to_dict()
    if args.json:
        _emit_json(out)
        return EXIT_OK
    print(f"solutions found: {len(sols)} (complete: {sols.complete})")
    for x in sols.solutions:
        print(f"  {_fmt(x)}")
    for s in sols.singular_patterns:
        print(f"singular vertex pattern: {[int(t) for t in s]}")
    if "trichotomy" in out:
        tri = out["trichotomy"]
        print(f"v'b = {tri['v_dot_b']:.3e}: {tri['case']}")
        if tri["case"] == Case.INFINITELY_MANY.value:
            fam = tri["family"]
            print(f"family x(alpha) = w - alpha*u, alpha <= {fam['alpha_max']:.17g}")
            print(f"  w = {_fmt(fam['w'])}")
            print(f"  u = {_fmt(fam['u'])}")
    return EXIT_OK


def cmd_example(args):
    kind = EXAMPLE_NAMES.get(args.name)
    if kind is None:
        raise InvalidKind(f"unknown example {args.name!r}; choose from {sorted(EXAMPLE_NAMES)}")
    inst = generate_instance(kind, n=args.n, seed=args.seed, rhs=args.rhs)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    io.write_matrix(out / "matrix.txt", inst.A)
    io.write_vector(out / "rhs.txt", inst.b)
    written = ["matrix.txt", "rhs.txt"]
    if inst.x0 is not None:
        io.write_vector(out / "x0.txt", inst.x0)
        written.append("x0.txt")
    print(f"wrote {', '.join(str(out / f) for f in written)}", file=sys.stderr)
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="avenewton", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="run the generalized Newton method")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--x0", default=None, help="starting point (default: zero vector)")
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("analyze", help="classify A and report certificates")
    p.add_argument("--matrix", required=True)
    p.add_argument("--regularity", action="store_true",
                   help="run the 2^n vertex test for [A - I, A + I] (n <= 20)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("enumerate", help="list all solutions by sign-vertex enumeration")
    p.add_argument("--matrix", required=True)
    p.add_argument("--rhs", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("example", help="write a generated instance to files")
    p.add_argument("--name", required=True, help=", ".join(EXAMPLE_NAMES))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--rhs", default="random", help=", ".join(RHS_KINDS))
    p.add_argument("--out", default=".")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TOO_LARGE
    except (UsageError, io.ParseError, InvalidKind, NotApplicable, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
