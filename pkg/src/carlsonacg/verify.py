"""Cross-module identity checks run by ``carlsonacg verify``."""

import math
from dataclasses import dataclass, field

import numpy as np

from . import acg, oracle, relation
from .carlson import rd, rf, rj
from .lambert import BRANCH_POINT, w_m1
from .sweeps import SweepSpec, sweep_rows

SEED = 20201


@dataclass
class Check:
    name: str
    error: float
    tolerance: float

    @property
    def passed(self):
        return bool(self.error <= self.tolerance)


@dataclass
class VerifyReport:
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def add(self, name, error, tolerance):
        self.checks.append(Check(name, float(error), float(tolerance)))

    def format(self):
        width = max(len(c.name) for c in self.checks)
        lines = [f"{'check':<{width}}  {'max error':>10}  {'tolerance':>10}  result"]
        for c in self.checks:
            flag = "PASS" if c.passed else "FAIL"
            lines.append(f"{c.name:<{width}}  {c.error:10.3e}  {c.tolerance:10.3e}  {flag}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _det_one_triples(rng, n, lo, hi):
    out = []
    while len(out) < n:
        u1, u2 = rng.uniform(math.log(lo), math.log(hi), 2)
        b = np.exp([u1, u2, -u1 - u2])
        if lo <= b.min() and b.max() <= hi:
            out.append(b)
    return out


def _lemma_error(xs):
    return max(abs(x * rd(1.0, 1.0, x * x) / 3.0 / relation.f_axial(x) - 1.0) for x in xs)


def run_verify(quick=False):
    rng = np.random.default_rng(SEED)
    report = VerifyReport()

    triples = rng.uniform(0.05, 50.0, size=(200, 3))
    err_sum = err_wsum = 0.0
    for x, y, z in triples:
        r1, r2, r3 = rd(y, z, x), rd(x, z, y), rd(x, y, z)
        err_sum = max(err_sum, abs((r1 + r2 + r3) * math.sqrt(x * y * z) / 3.0 - 1.0))
        err_wsum = max(err_wsum, abs((x * r1 + y * r2 + z * r3) / (3.0 * rf(x, y, z)) - 1.0))
    report.add("rd_sum_identity", err_sum, 1e-12)
    report.add("rd_weighted_sum_identity", err_wsum, 1e-12)

    report.add("lemma_arccos", _lemma_error(np.logspace(-3, math.log10(0.999), 500)), 1e-11)
    report.add("lemma_arctanh", _lemma_error(np.logspace(math.log10(1.001), 3, 500)), 1e-11)

    report.add("limit_xRD_3", abs(1e-6 * rd(1, 1, 1e-12) - 3.0), 1e-4)
    x1 = 1.0 - 1e-9
    report.add("limit_xRD_1", abs(x1 * rd(1, 1, x1 * x1) - 1.0), 1e-6)
    report.add("limit_xRD_inf", 1e6 * rd(1, 1, 1e12), 1e-8)

    xs = -np.logspace(math.log10(-BRANCH_POINT), -12, 100)
    xs[0] = BRANCH_POINT
    res = max(abs(w_m1(x) * math.exp(w_m1(x)) - x) / abs(x) for x in xs)
    report.add("lambert_residual", res, 1e-13)
    report.add("lambert_branch_point", abs(w_m1(BRANCH_POINT) + 1.0), 1e-8)

    n_sets = 10 if quick else 50
    args = rng.uniform(0.05, 50.0, size=(n_sets, 4))
    err = 0.0
    for x, y, z, p in args:
        err = max(
            err,
            abs(oracle.rf_quad(x, y, z) / rf(x, y, z) - 1.0),
            abs(oracle.rd_quad(x, y, z) / rd(x, y, z) - 1.0),
            abs(oracle.rj_quad(x, y, z, p) / rj(x, y, z, p) - 1.0),
        )
    report.add("oracle_r_functions", err, 1e-8)

    e_a = e_sphere = e_t = 0.0
    for b in _det_one_triples(rng, 5 if quick else 20, 0.1, 10.0):
        a = acg.a_from_b(b)
        e_a = max(e_a, np.max(np.abs(np.diag(oracle.sphere_moment(b, 2)) - a)))
        closure = np.array(acg.exact_closure(a, b).values)
        e_sphere = max(e_sphere, np.max(np.abs(np.array(oracle.sphere_moment(b, 4).values) - closure)))
        e_t = max(e_t, np.max(np.abs(np.array(oracle.aiv_t_integral(b).values) - closure)))
    report.add("a_from_b_vs_sphere", e_a, 1e-7)
    report.add("closure_vs_sphere", e_sphere, 1e-6)
    report.add("closure_vs_t_integral", e_t, 1e-6)

    e_round = 0.0
    iters = 0
    for b in _det_one_triples(rng, 50, 0.05, 20.0):
        res = acg.newton_b_from_a(acg.a_from_b(b))
        e_round = max(e_round, np.max(np.abs(np.array(res.b) / b - 1.0)))
        iters = max(iters, res.iterations)
    report.add("newton_roundtrip", e_round, 1e-9)
    report.add("newton_iterations", iters, 30)

    e_con = 0.0
    for _ in range(100):
        a = rng.dirichlet(np.ones(3))
        e_con = max(e_con, np.max(np.abs(acg.closure(a).contraction() - a)))
        planar = np.array([a[0], a[1], 0.0]) / (a[0] + a[1])
        e_con = max(e_con, np.max(np.abs(acg.planar_closure(planar).contraction() - planar)))
    report.add("contraction_identity", e_con, 1e-12)

    iso = acg.closure((1 / 3, 1 / 3, 1 / 3)).iijj()
    expected = np.full((3, 3), 1 / 15) + np.eye(3) * (1 / 5 - 1 / 15)
    report.add("isotropic_closure", np.max(np.abs(iso - expected)), 1e-8)

    header, rows = sweep_rows(SweepSpec("a_to_0", 1e-6, 1e-2, 60))
    rows = np.array(rows)
    report.add("a_to_0_asym1_not_below_asym2_count", np.sum(rows[:, 5] >= rows[:, 6]), 0)
    report.add("a_to_0_asym1_error_at_1e-6", rows[0, 5], 0.05)
    header, rows = sweep_rows(SweepSpec("a_to_1", 1e-4, 1e-1, 60))
    rows = np.array(rows)
    report.add("a_to_1_asym5_above_asym4_count", np.sum(rows[:, 6] > rows[:, 5]), 0)
    report.add("a_to_1_error_at_1e-4", max(rows[0, 5], rows[0, 6]), 1e-4)
    return report
