"""Second and fourth moments of the angular central Gaussian (ACG) distribution.

In the common eigenbasis the ACG parameter B = diag(b) with det(B) = 1 maps to
the second moment A = diag(a) on the unit simplex by a = R_D(b) / 3
component-wise (``a_from_b``).  The exact closure returns the fourth moment
from a consistent pair (a, b); the inverse map a -> b is solved by Newton's
method except on the simplex boundary, where the planar formulas apply.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from .carlson import _rd, rd_partials
from .errors import ConsistencyError, ConvergenceError, DomainError, MethodMismatchError
from .lambert import w_m1
from .relation import (
    A_ZERO_MAX,
    f_axial,
    inv_asym_zero,
    inv_first_order_one,
    inv_second_order_one,
    lambert_argument,
)
from .tensors import ClosureMethod, EigenTriple, SymTensor4

DET_TOL = 1e-8
SIMPLEX_TOL = 1e-8
# a_i below this is treated as zero: the corresponding b_i would diverge
BOUNDARY = 1e-10
# two a_i closer than this are treated as an exact axial state
AXIAL_TOL = 1e-12
# relative gap of b_i, b_j below which the closure's divided difference is
# replaced by its analytic limit
DEGENERATE_GAP = 1e-7
CONSISTENCY_TOL = 1e-8

NEWTON_TOL = 1e-12
NEWTON_MAXITER = 50
MAX_HALVINGS = 20


def _finite_triple(name, v):
    v = EigenTriple.of(v)
    if not all(math.isfinite(c) for c in v):
        raise DomainError(f"{name}: non-finite component in {tuple(v)}")
    return v


def normalize_b(b):
    """Validate a parameter triple and rescale it to det = 1.

    Raises ``DomainError`` for nonpositive components or when the determinant
    is off by more than ``DET_TOL``; smaller deviations are removed by a
    geometric rescaling.
    """
    b = _finite_triple("b", b)
    if min(b) <= 0:
        raise DomainError(f"b must be positive, got {tuple(b)}")
    det = b[0] * b[1] * b[2]
    if abs(det - 1.0) > DET_TOL:
        raise DomainError(f"b must satisfy b1*b2*b3 = 1, got det = {det!r}")
    if det != 1.0:
        s = det ** (-1.0 / 3.0)
        b = EigenTriple(b[0] * s, b[1] * s, b[2] * s)
    return b


def normalize_a(a):
    """Validate a second-moment spectrum and rescale it onto the unit simplex."""
    a = _finite_triple("a", a)
    if min(a) < 0:
        raise DomainError(f"a must be nonnegative, got {tuple(a)}")
    total = sum(a)
    if abs(total - 1.0) > SIMPLEX_TOL:
        raise DomainError(f"a must sum to 1, got sum = {total!r}")
    return EigenTriple(a[0] / total, a[1] / total, a[2] / total)


def _a_raw(b1, b2, b3):
    return (_rd(b2, b3, b1) / 3.0, _rd(b1, b3, b2) / 3.0, _rd(b1, b2, b3) / 3.0)


def a_from_b(b):
    """Second-moment eigenvalues a_i = R_D(b_j, b_k, b_i) / 3 for a det-1 parameter triple."""
    return EigenTriple(*_a_raw(*normalize_b(b)))


def _da_db(b):
    # G[i, m] = d a_i / d b_m
    g = np.empty((3, 3))
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        dx, dy, dz = rd_partials(b[j], b[k], b[i])
        g[i, j], g[i, k], g[i, i] = dx / 3.0, dy / 3.0, dz / 3.0
    return g


@dataclass(frozen=True)
class NewtonResult:
    b: EigenTriple
    iterations: int
    residual: float


def _check_interior(a):
    if min(a) < BOUNDARY:
        raise DomainError(
            f"a={tuple(a)} has a component below {BOUNDARY}; use the planar or unidirectional path"
        )


def newton_b_from_a(a, tol=NEWTON_TOL, maxiter=NEWTON_MAXITER):
    """Invert a = R_D(b) / 3 for an interior simplex point by damped Newton.

    The unknowns are the logarithms of the two b_i belonging to the smallest
    a_i, the third b follows from det(B) = 1.  The residuals are the
    logarithmic mismatches of those two a_i, which keeps small eigenvalues
    accurate in the relative sense.
    """
    a = normalize_a(a)
    _check_interior(a)
    target = np.array(a)
    dep = int(np.argmax(target))
    free = [m for m in range(3) if m != dep]
    inv = 1.0 / target
    b = inv / np.prod(inv) ** (1.0 / 3.0)
    u = np.log(b[free])

    def assemble(u):
        bb = np.empty(3)
        bb[free] = np.exp(u)
        bb[dep] = 1.0 / (bb[free[0]] * bb[free[1]])
        return bb

    def mismatch(bb):
        cur = np.array(_a_raw(*bb))
        return cur, np.log(cur[free] / target[free])

    b = assemble(u)
    cur, r = mismatch(b)
    for it in range(1, maxiter + 1):
        rel = np.max(np.abs(cur / target - 1.0))
        if rel < tol:
            return NewtonResult(EigenTriple.of(b), it - 1, float(rel))
        g = _da_db(b)
        jac = np.empty((2, 2))
        for row, i in enumerate(free):
            for col, m in enumerate(free):
                jac[row, col] = (g[i, m] * b[m] - g[i, dep] * b[dep]) / cur[i]
        step = np.linalg.solve(jac, -r)
        norm = np.max(np.abs(r))
        for _ in range(MAX_HALVINGS):
            b_try = assemble(u + step)
            cur_try, r_try = mismatch(b_try)
            if np.max(np.abs(r_try)) < norm:
                break
            step *= 0.5
        else:
            if rel < 1e3 * tol:
                # stalled at the rounding floor
                return NewtonResult(EigenTriple.of(b), it, float(rel))
            raise ConvergenceError(f"Newton for b_from_a({tuple(a)}) stalled", estimate=rel)
        u = u + step
        b, cur, r = b_try, cur_try, r_try
    rel = float(np.max(np.abs(cur / target - 1.0)))
    if rel < tol:
        return NewtonResult(EigenTriple.of(b), maxiter, rel)
    raise ConvergenceError(
        f"Newton for b_from_a({tuple(a)}) did not converge in {maxiter} iterations", estimate=rel
    )


def b_from_a(a):
    """Parameter eigenvalues b (det 1) whose ACG second moment has eigenvalues a."""
    return newton_b_from_a(a).b


def axial_forward(beta):
    """a = R_D(beta^-1/2, beta^-1/2, beta) / 3 = f_axial(beta^3/4) on the axial line."""
    if not (math.isfinite(beta) and beta > 0):
        raise DomainError(f"axial_forward: beta={beta!r} must be positive")
    return f_axial(beta**0.75)


def axial_invert(a):
    """Solve axial_forward(beta) = a for beta, with a in (1e-12, 1 - 1e-12).

    The root is bracketed in log(x), x = beta^(3/4), where f_axial is
    monotone, and polished by Brent's method on the relative residual.
    """
    if not (1e-12 < a < 1.0 - 1e-12):
        raise DomainError(f"axial_invert: a={a!r} outside (1e-12, 1 - 1e-12)")

    def resid(s):
        return f_axial(math.exp(s)) / a - 1.0

    s = brentq(resid, -60.0, 60.0, xtol=1e-16, rtol=4 * np.finfo(float).eps, maxiter=500)
    return math.exp(s) ** (4.0 / 3.0)


def axial_b(a, beta, axis=0):
    """Eigenvalue triples (a, b) of the axial state with distinct eigenvalue a on ``axis``."""
    av = [(1.0 - a) / 2.0] * 3
    bv = [beta**-0.5] * 3
    av[axis] = a
    bv[axis] = beta
    return EigenTriple(*av), EigenTriple(*bv)


def _pair_limit(c, bk):
    # limit of (a_i b_i - a_j b_j) / (b_i - b_j) as b_i, b_j -> c
    dx, _, dz = rd_partials(c, bk, c)
    return (_rd(c, bk, c) + c * (dz - dx)) / 3.0


def exact_closure(a, b):
    """Fourth moment of the ACG distribution from a consistent pair (a, b).

    Off-diagonal entries are A_iijj = (a_i b_i - a_j b_j) / (2 (b_i - b_j)); the
    diagonal ones follow from sum_j A_iijj = a_i.  Near-equal b_i, b_j use the
    analytic limit of the divided difference.
    """
    a = _finite_triple("a", a)
    b = normalize_b(b)
    a_check = _a_raw(*b)
    for ai, ci in zip(a, a_check):
        if abs(ai - ci) > CONSISTENCY_TOL * max(ai, ci):
            raise ConsistencyError(f"a={tuple(a)} does not match a_from_b(b)={a_check}")
    bmax = max(b)
    m = np.zeros((3, 3))
    for i in range(3):
        for j in range(i + 1, 3):
            k = 3 - i - j
            if abs(b[i] - b[j]) < DEGENERATE_GAP * bmax:
                d = _pair_limit(0.5 * (b[i] + b[j]), b[k])
            else:
                d = (a[i] * b[i] - a[j] * b[j]) / (b[i] - b[j])
            m[i, j] = m[j, i] = 0.5 * d
    for i in range(3):
        m[i, i] = a[i] - (m[i].sum() - m[i, i])
    return SymTensor4.from_iijj(m)


def _plane_check(a, zeros_allowed):
    a = normalize_a(a)
    zeros = [i for i in range(3) if a[i] <= 1e-14]
    if len(zeros) not in zeros_allowed:
        raise DomainError(f"a={tuple(a)} is not a planar orientation state")
    return a


def planar_b_from_a(a):
    """b_i = 1/a_i - 1 in the plane of a state with exactly one zero eigenvalue.

    The out-of-plane component is returned as ``inf``.
    """
    a = _plane_check(a, (1,))
    return EigenTriple(*(1.0 / ai - 1.0 if ai > 1e-14 else math.inf for ai in a))


def planar_closure(a):
    """A_iijj = a_i (a_j + delta_ij) / 2 for planar and unidirectional states."""
    a = _plane_check(a, (1, 2))
    av = np.array([ai if ai > 1e-14 else 0.0 for ai in a])
    return SymTensor4.from_iijj(0.5 * av[:, None] * (av[None, :] + np.eye(3)))


def aiiii_asym1(a):
    """A_iiii ~ (3a - 1) / (2 + W_{-1}(-e^2 a / 2) / a) as a -> 0+ on the axial line."""
    if not (a > 0 and a <= A_ZERO_MAX):
        raise DomainError(f"aiiii_asym1: a={a!r} outside (0, 2e^-3]")
    return (3.0 * a - 1.0) / (2.0 + w_m1(lambert_argument(a)) / a)


def aiiii_asym2(a):
    """Variant of aiiii_asym1 with W_{-1}(x) replaced by ln(-x); converges to the wrong asymptote."""
    if not (a > 0 and a < 2.0 * math.exp(-2.0)):
        raise DomainError(f"aiiii_asym2: a={a!r} outside (0, 2/e^2)")
    den = 2.0 + math.log(0.5 * math.e**2 * a) / a
    if den == 0.0:
        raise DomainError(f"aiiii_asym2: vanishing denominator at a={a!r}")
    return (3.0 * a - 1.0) / den


def aiiii_asym4(a):
    """A_iiii ~ (3a - 1) / (2 - 8 (a - 1)^2 / pi^2) as a -> 1-."""
    if not (a > 0 and a <= 1):
        raise DomainError(f"aiiii_asym4: a={a!r} outside (0, 1]")
    return (3.0 * a - 1.0) / (2.0 - 8.0 * (a - 1.0) ** 2 / math.pi**2)


def aiiii_asym5(a):
    """Second-order asymptote of A_iiii as a -> 1-."""
    radicand = 32.0 * (a - 1.0) + math.pi**2
    if not (a <= 1 and radicand >= 0):
        raise DomainError(f"aiiii_asym5: a={a!r} outside [1 - pi^2/32, 1]")
    return (3.0 * a - 1.0) / (2.0 - (math.pi - math.sqrt(radicand)) ** 2 / 32.0)


ASYMPTOTES = {
    ClosureMethod.ASYM1: aiiii_asym1,
    ClosureMethod.ASYM2: aiiii_asym2,
    ClosureMethod.ASYM4: aiiii_asym4,
    ClosureMethod.ASYM5: aiiii_asym5,
}


def distinct_axis(a, tol=AXIAL_TOL):
    """Index of the odd eigenvalue out if exactly two a_i coincide, else None."""
    for i in range(3):
        j, k = [m for m in range(3) if m != i]
        if abs(a[j] - a[k]) <= tol and abs(a[i] - a[j]) > tol:
            return i
    return None


def axial_closure(a, aiiii):
    """Complete an axial-state tensor from its A_iiii along the symmetry axis.

    Rotational symmetry about the axis i fixes A_jjjj = 3 A_jjkk in the
    transverse plane, and the contraction identity supplies the rest.
    """
    i = distinct_axis(a)
    if i is None:
        raise MethodMismatchError(f"a={tuple(a)} is not an axially symmetric state")
    j, k = [m for m in range(3) if m != i]
    m = np.zeros((3, 3))
    m[i, i] = aiiii
    m[i, j] = m[j, i] = m[i, k] = m[k, i] = 0.5 * (a[i] - aiiii)
    aj = 0.5 * (a[j] + a[k])
    transverse = 0.25 * (aj - m[i, j])
    m[j, k] = m[k, j] = transverse
    m[j, j] = m[k, k] = 3.0 * transverse
    return SymTensor4.from_iijj(m)


def solve_b(a):
    """Parameter triple for any simplex point, routing by the eigenvalue pattern.

    Boundary states return ``inf`` for the diverging components.
    """
    a = normalize_a(a)
    zeros = [i for i in range(3) if a[i] < BOUNDARY]
    if len(zeros) == 2:
        return EigenTriple(*(0.0 if i not in zeros else math.inf for i in range(3)))
    if len(zeros) == 1:
        return planar_b_from_a(EigenTriple(*(0.0 if i in zeros else a[i] for i in range(3))))
    if max(a) - min(a) <= AXIAL_TOL:
        return EigenTriple(1.0, 1.0, 1.0)
    i = distinct_axis(a)
    if i is not None:
        return axial_b(a[i], axial_invert(a[i]), axis=i)[1]
    return b_from_a(a)


def _zeroed(a):
    return EigenTriple(*(0.0 if ai < BOUNDARY else ai for ai in a))


def closure(a, method=ClosureMethod.EXACT):
    """Fourth-moment tensor for the second-moment eigenvalues ``a``.

    EXACT routes unidirectional and planar states to the planar formula,
    axial states through the scalar inversion and everything else through
    Newton before applying the exact closure.  The ASYM* methods need an
    axially symmetric ``a`` and use the asymptote for A_iiii on the axis.
    """
    method = ClosureMethod(method)
    a = normalize_a(a)
    zeros = sum(ai < BOUNDARY for ai in a)
    if method is ClosureMethod.UNIDIRECTIONAL:
        if zeros != 2:
            raise MethodMismatchError(f"a={tuple(a)} is not a unidirectional state")
        return planar_closure(_zeroed(a))
    if method is ClosureMethod.PLANAR:
        if zeros == 0:
            raise MethodMismatchError(f"a={tuple(a)} has no zero eigenvalue")
        return planar_closure(_zeroed(a))
    if method.is_asymptotic:
        i = distinct_axis(a)
        if i is None:
            raise MethodMismatchError(f"{method.value} needs an axially symmetric a, got {tuple(a)}")
        return axial_closure(a, ASYMPTOTES[method](a[i]))
    if zeros:
        return planar_closure(_zeroed(a))
    b = solve_b(a)
    i = distinct_axis(a)
    if i is not None:
        # keep the exact degeneracy of the transverse pair
        a = axial_b(a[i], b[i], axis=i)[0]
    return exact_closure(a, b)


def exact_axial_aiiii(a):
    """A_iiii on the axial line from the full pipeline a -> beta -> exact closure."""
    av, bv = axial_b(a, axial_invert(a))
    return exact_closure(av, bv)[(0, 0, 0, 0)]


def asymptotic_beta(a, method):
    """The axial parameter beta implied by the inverse used in an asymptote."""
    method = ClosureMethod(method)
    if method is ClosureMethod.ASYM1:
        return inv_asym_zero(a) ** (4.0 / 3.0)
    if method is ClosureMethod.ASYM2:
        # W_{-1}(-e^2 a / 2) replaced by its leading logarithm
        return (-math.log(0.5 * math.e**2 * a) / (2.0 * a)) ** (2.0 / 3.0)
    if method is ClosureMethod.ASYM4:
        return inv_first_order_one(a) ** (4.0 / 3.0)
    if method is ClosureMethod.ASYM5:
        return inv_second_order_one(a) ** (4.0 / 3.0)
    raise MethodMismatchError(f"{method.value} is not an asymptotic method")
