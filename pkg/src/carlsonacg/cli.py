"""Command-line front end.

Subcommands: ``eval``, ``closure``, ``invert``, ``sweep``, ``recipe`` and
``verify``.  Exit status is 0 on success, 1 on domain, convergence or check
failures and 2 on usage errors.
"""

import argparse
import math
import sys
from decimal import Decimal

import numpy as np

from . import acg, carlson, lambert, relation
from .errors import ConsistencyError, ConvergenceError, DomainError, MethodMismatchError
from .sweeps import LINES, SweepSpec, gnuplot_recipe, write_sweep
from .tensors import ClosureMethod

FUNCTIONS = {
    "rc": (carlson.rc, 2),
    "rf": (carlson.rf, 3),
    "rd": (carlson.rd, 3),
    "rj": (carlson.rj, 4),
    "w_m1": (lambert.w_m1, 1),
    "f_axial": (relation.f_axial, 1),
}

INVERSIONS = {
    "b": (lambda *a: acg.solve_b(a), 3),
    "axial": (acg.axial_invert, 1),
    "asym_zero": (relation.inv_asym_zero, 1),
    "first_order_one": (relation.inv_first_order_one, 1),
    "second_order_one": (relation.inv_second_order_one, 1),
}


def format_value(v):
    """17 significant digits, positional unless the magnitude calls for an exponent."""
    v = float(v)
    if not math.isfinite(v):
        return repr(v)
    text = f"{v:.16e}"
    if v != 0 and not 1e-4 <= abs(v) < 1e16:
        return text
    return format(Decimal(text), "f")


def _parse_range(text):
    try:
        lo, hi = (float(s) for s in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo:hi, got {text!r}")
    return lo, hi


def cmd_eval(args, parser):
    fn, arity = FUNCTIONS[args.function]
    if len(args.args) != arity:
        parser.error(f"{args.function} takes {arity} argument(s), got {len(args.args)}")
    print(format_value(fn(*args.args)))


def cmd_invert(args, parser):
    fn, arity = INVERSIONS[args.kind]
    if len(args.values) != arity:
        parser.error(f"invert {args.kind} takes {arity} value(s), got {len(args.values)}")
    result = fn(*args.values)
    values = result if isinstance(result, tuple) else (result,)
    print(" ".join(format_value(v) for v in values))


def _closure_b(a, method):
    if method.is_asymptotic:
        i = acg.distinct_axis(a)
        return acg.axial_b(a[i], acg.asymptotic_beta(a[i], method), axis=i)[1]
    return acg.solve_b(a)


def cmd_closure(args, parser):
    a = np.array(args.a, dtype=float)
    total = a.sum()
    if abs(total - 1.0) > acg.SIMPLEX_TOL:
        if total <= 0 or np.any(a < 0):
            raise DomainError(f"a={tuple(a)} cannot be normalized onto the simplex")
        print(f"warning: a sums to {total!r}; renormalizing", file=sys.stderr)
        a = a / total
    method = ClosureMethod(args.method)
    tensor = acg.closure(a, method)
    a = acg.normalize_a(a)
    b = _closure_b(a, method)
    m = tensor.iijj()
    if args.format == "csv":
        print("name,value")
        for i in range(3):
            print(f"b{i + 1},{repr(float(b[i]))}")
        for i in range(3):
            for j in range(3):
                print(f"A{i + 1}{i + 1}{j + 1}{j + 1},{repr(float(m[i, j]))}")
    else:
        print(f"method: {method.value}")
        print("b:      " + "  ".join(f"{v:>22}" for v in map(format_value, b)))
        print("A_iijj:")
        for i in range(3):
            print("        " + "  ".join(f"{format_value(v):>22}" for v in m[i]))


def cmd_sweep(args, parser):
    spec = SweepSpec.default(args.line, args.points, args.spacing)
    if args.range is not None:
        spec = SweepSpec(args.line, *args.range, args.points, args.spacing)
    n = write_sweep(spec, args.out)
    print(f"wrote {n} rows to {args.out}", file=sys.stderr)


def cmd_recipe(args, parser):
    sys.stdout.write(gnuplot_recipe(args.line, args.csv))


def cmd_verify(args, parser):
    from .verify import run_verify

    report = run_verify(quick=args.quick)
    print(report.format())
    return 0 if report.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="carlsonacg",
        description="Carlson elliptic integrals and the exact ACG fourth-moment closure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a special function at a point")
    p.add_argument("function", choices=sorted(FUNCTIONS))
    p.add_argument("args", type=float, nargs="+")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("closure", help="fourth moment A_iijj from second-moment eigenvalues")
    p.add_argument("a", type=float, nargs=3)
    p.add_argument("--method", choices=[m.value for m in ClosureMethod], default="exact")
    p.add_argument("--format", choices=("table", "csv"), default="table")
    p.set_defaults(handler=cmd_closure)

    p = sub.add_parser("invert", help="recover parameters from moments")
    p.add_argument("kind", choices=sorted(INVERSIONS))
    p.add_argument("values", type=float, nargs="+")
    p.set_defaults(handler=cmd_invert)

    p = sub.add_parser("sweep", help="write figure data as CSV")
    p.add_argument("line", choices=LINES)
    p.add_argument("--range", type=_parse_range, default=None, metavar="LO:HI")
    p.add_argument("--points", type=int, default=200)
    p.add_argument("--spacing", choices=("log", "linear"), default="log")
    p.add_argument("--out", required=True, metavar="PATH")
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("recipe", help="print gnuplot commands for a sweep CSV")
    p.add_argument("line", choices=LINES)
    p.add_argument("--csv", default="sweep.csv", metavar="PATH")
    p.set_defaults(handler=cmd_recipe)

    p = sub.add_parser("verify", help="run the identity and oracle checks")
    p.add_argument("--quick", action="store_true", help="fewer oracle samples")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        status = args.handler(args, parser)
    except (DomainError, ConsistencyError, MethodMismatchError, ConvergenceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
