"""One-dimensional parameter sweeps written as CSV plot data.

Four lines are available:

``a_to_0``
    axial states with distinct eigenvalue a -> 0: exact A_iiii against the
    W_{-1} asymptote and its logarithmic variant.
``a_to_1``
    axial states with a -> 1 (the sweep variable is 1 - a): exact A_iiii
    against the first- and second-order asymptotes.
``lemma``
    x R_D(1, 1, x^2) / 3 against its closed form.
``arccos_fig2``
    Re[(arccos x)^2] against -(ln 2x)^2.
"""

import csv
import io
import math
from dataclasses import dataclass

import numpy as np

from . import acg, relation
from .carlson import rd
from .errors import DomainError

LINES = ("a_to_0", "a_to_1", "lemma", "arccos_fig2")

DEFAULT_RANGES = {
    "a_to_0": (1e-6, 0.1),
    "a_to_1": (1e-4, 0.3),
    "lemma": (0.01, 100.0),
    "arccos_fig2": (0.01, 1000.0),
}

HEADERS = {
    "a_to_0": ("a", "b", "Aiiii_exact", "Aiiii_asym1", "Aiiii_asym2", "relerr_asym1", "relerr_asym2"),
    "a_to_1": ("a", "b", "Aiiii_exact", "Aiiii_asym4", "Aiiii_asym5", "relerr_asym4", "relerr_asym5"),
    "lemma": ("x", "lhs", "rhs", "relerr"),
    "arccos_fig2": ("x", "arccos_sq", "asymptote", "relerr"),
}


@dataclass(frozen=True)
class SweepSpec:
    line: str
    lo: float
    hi: float
    points: int = 200
    spacing: str = "log"

    def __post_init__(self):
        if self.line not in LINES:
            raise DomainError(f"unknown sweep line {self.line!r}; choose from {', '.join(LINES)}")
        if not self.lo < self.hi:
            raise DomainError(f"sweep range needs lo < hi, got {self.lo!r}:{self.hi!r}")
        if self.points < 2:
            raise DomainError(f"a sweep needs at least 2 points, got {self.points}")
        if self.spacing not in ("log", "linear"):
            raise DomainError(f"spacing must be 'log' or 'linear', got {self.spacing!r}")
        if self.spacing == "log" and self.lo <= 0:
            raise DomainError("log spacing needs a positive lower bound")

    @classmethod
    def default(cls, line, points=200, spacing="log"):
        lo, hi = DEFAULT_RANGES.get(line, (math.nan, math.nan))
        return cls(line, lo, hi, points, spacing)

    def grid(self):
        if self.spacing == "log":
            return np.logspace(math.log10(self.lo), math.log10(self.hi), self.points)
        return np.linspace(self.lo, self.hi, self.points)


def _or_nan(fn, *args):
    try:
        return fn(*args)
    except DomainError:
        return math.nan


def _relerr(approx, exact):
    return abs(approx / exact - 1.0)


def _row_a_to_0(a):
    beta = acg.axial_invert(a)
    av, bv = acg.axial_b(a, beta)
    exact = acg.exact_closure(av, bv)[(0, 0, 0, 0)]
    asym1 = _or_nan(acg.aiiii_asym1, a)
    asym2 = _or_nan(acg.aiiii_asym2, a)
    return (a, beta, exact, asym1, asym2, _relerr(asym1, exact), _relerr(asym2, exact))


def _row_a_to_1(one_minus_a):
    a = 1.0 - one_minus_a
    beta = acg.axial_invert(a)
    av, bv = acg.axial_b(a, beta)
    exact = acg.exact_closure(av, bv)[(0, 0, 0, 0)]
    asym4 = _or_nan(acg.aiiii_asym4, a)
    asym5 = _or_nan(acg.aiiii_asym5, a)
    return (a, beta, exact, asym4, asym5, _relerr(asym4, exact), _relerr(asym5, exact))


def _row_lemma(x):
    lhs = x * rd(1.0, 1.0, x * x) / 3.0
    rhs = relation.f_axial(x)
    return (x, lhs, rhs, _relerr(lhs, rhs))


def _row_arccos(x):
    exact = relation.re_arccos_sq(x)
    return (x, exact, -math.log(2.0 * x) ** 2, relation.arccos_sq_relative_error(x))


_ROWS = {
    "a_to_0": _row_a_to_0,
    "a_to_1": _row_a_to_1,
    "lemma": _row_lemma,
    "arccos_fig2": _row_arccos,
}


def sweep_rows(spec):
    """Header and data rows of a sweep, in grid order."""
    row = _ROWS[spec.line]
    return HEADERS[spec.line], [row(float(v)) for v in spec.grid()]


def format_cell(v):
    # repr is the shortest decimal that round-trips to the same double
    return repr(float(v))


def to_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(v) for v in row])
    return buf.getvalue()


def write_sweep(spec, path):
    header, rows = sweep_rows(spec)
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(to_csv(header, rows))
    return len(rows)


_RECIPES = {
    "a_to_0": """\
set datafile separator ","
set logscale xy
set xlabel "a"
set multiplot layout 1,2
plot '{csv}' every ::1 using 1:3 with lines title "exact", \\
     '' every ::1 using 1:4 with lines title "W_{{-1}} asymptote", \\
     '' every ::1 using 1:5 with lines title "log asymptote"
set ylabel "relative error"
plot '{csv}' every ::1 using 1:6 with lines title "W_{{-1}} asymptote", \\
     '' every ::1 using 1:7 with lines title "log asymptote"
unset multiplot
""",
    "a_to_1": """\
set datafile separator ","
set logscale x
set xlabel "1-a"
set multiplot layout 1,2
plot '{csv}' every ::1 using (1-$1):3 with lines title "exact", \\
     '' every ::1 using (1-$1):4 with lines title "first order", \\
     '' every ::1 using (1-$1):5 with lines title "second order"
set logscale y
set ylabel "relative error"
plot '{csv}' every ::1 using (1-$1):6 with lines title "first order", \\
     '' every ::1 using (1-$1):7 with lines title "second order"
unset multiplot
""",
    "lemma": """\
set datafile separator ","
set logscale x
set xlabel "x"
plot '{csv}' every ::1 using 1:2 with lines title "x R_D(1,1,x^2)/3", \\
     '' every ::1 using 1:3 with points title "closed form"
""",
    "arccos_fig2": """\
set datafile separator ","
set logscale x
set xlabel "x"
set multiplot layout 1,2
plot '{csv}' every ::1 using 1:2 with lines title "Re arccos(x)^2", \\
     '' every ::1 using 1:3 with lines dt 2 title "-ln(2x)^2"
set logscale y
set ylabel "relative error"
plot '{csv}' every ::1 using 1:(abs($4)) with lines notitle
unset multiplot
""",
}


def gnuplot_recipe(line, csv_path):
    """Gnuplot commands that plot the CSV written for ``line``."""
    if line not in _RECIPES:
        raise DomainError(f"unknown sweep line {line!r}")
    return _RECIPES[line].format(csv=csv_path)
