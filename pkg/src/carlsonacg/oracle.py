"""Slow brute-force evaluators used to check the fast paths.

Nothing in here calls into ``carlson`` or ``acg``: the R-functions come from
their defining integral, and the ACG moments from quadrature of the density
over the sphere (or circle) and of the t-integral representation.
"""

import itertools
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad, quad_vec

from .errors import ConvergenceError, DomainError
from .tensors import SymTensor4

QUAD_EPSREL = 1e-13
QUAD_TOL = 1e-9

SPHERE_NODES = 128
SPHERE_MAX_NODES = 1024
SPHERE_TOL = 1e-9
SPHERE_WINDOW = (0.02, 50.0)


@dataclass(frozen=True)
class HyperParams:
    """Parameters a, b_j and arguments z_j of R_{-a}(b; z)."""

    a: float
    b: tuple
    z: tuple

    def __post_init__(self):
        if len(self.b) != len(self.z):
            raise DomainError("HyperParams: b and z must have equal length")
        if not self.a > 0:
            raise DomainError(f"HyperParams: need a > 0, got {self.a!r}")
        if not self.a_prime > 0:
            raise DomainError(f"HyperParams: need sum(b) - a > 0, got {self.a_prime!r}")
        if any(not math.isfinite(zj) or zj < 0 for zj in self.z):
            raise DomainError(f"HyperParams: arguments must be nonnegative, got {self.z}")

    @property
    def a_prime(self):
        return sum(self.b) - self.a


def _checked_quad(f, lo, hi, what):
    val, err = quad(f, lo, hi, epsabs=0.0, epsrel=QUAD_EPSREL, limit=500)
    if err > QUAD_TOL * abs(val):
        raise ConvergenceError(f"{what}: quadrature error estimate {err:.3g}", estimate=err)
    return val


def r_hyper(p):
    """R_{-a}(b; z) = 1/B(a, a') int_0^inf t^(a'-1) prod_j (t + z_j)^(-b_j) dt.

    The integral is split at t = 1 and the tail is mapped by t = 1/u, so both
    pieces live on [0, 1] with at worst integrable endpoint singularities.
    """
    ap = p.a_prime
    b = np.asarray(p.b, dtype=float)
    z = np.asarray(p.z, dtype=float)

    def log_integrand(t):
        return (ap - 1.0) * math.log(t) - float(np.dot(b, np.log(t + z)))

    def head(t):
        return math.exp(log_integrand(t)) if t > 0 else _head_at_zero(ap, b, z)

    def tail(u):
        if u == 0.0:
            return 0.0
        return math.exp(log_integrand(1.0 / u) - 2.0 * math.log(u))

    total = _checked_quad(head, 0.0, 1.0, "r_hyper") + _checked_quad(tail, 0.0, 1.0, "r_hyper")
    log_beta = math.lgamma(p.a) + math.lgamma(ap) - math.lgamma(p.a + ap)
    return total * math.exp(-log_beta)


def _head_at_zero(ap, b, z):
    # only reached if quad samples the endpoint itself
    if ap != 1.0 or np.any(z == 0):
        return 0.0
    return float(np.prod(z ** (-b)))


def rf_quad(x, y, z):
    return r_hyper(HyperParams(0.5, (0.5, 0.5, 0.5), (x, y, z)))


def rd_quad(x, y, z):
    return r_hyper(HyperParams(1.5, (0.5, 0.5, 1.5), (x, y, z)))


def rj_quad(x, y, z, p):
    return r_hyper(HyperParams(1.5, (0.5, 0.5, 0.5, 1.0), (x, y, z, p)))


def rc_quad(x, y):
    return r_hyper(HyperParams(0.5, (0.5, 1.0), (x, y)))


def acg_density(p, b):
    """ACG density on the unit sphere S^(n-1), n = 2 or 3, with B = diag(b) = Lambda^-1.

    ``p`` has shape (..., n); returns an array of shape (...).
    """
    p = np.asarray(p, dtype=float)
    b = np.asarray(b, dtype=float)
    n = b.shape[0]
    if n not in (2, 3) or p.shape[-1] != n:
        raise DomainError("acg_density: only n = 2 and n = 3 are supported")
    const = 0.5 * math.gamma(n / 2.0) / math.pi ** (n / 2.0) * math.sqrt(np.prod(b))
    quad_form = np.einsum("...i,i,...i->...", p, b, p)
    return const * quad_form ** (-n / 2.0)


def _sphere_grid(n):
    mu, wmu = np.polynomial.legendre.leggauss(n)
    phi = np.pi * np.arange(2 * n) / n
    s = np.sqrt(1.0 - mu * mu)
    p = np.stack(
        [
            s[:, None] * np.cos(phi)[None, :],
            s[:, None] * np.sin(phi)[None, :],
            np.broadcast_to(mu[:, None], (n, 2 * n)),
        ],
        axis=-1,
    )
    w = wmu[:, None] * (np.pi / n) * np.ones((1, 2 * n))
    return p, w


_PAIRS = tuple(itertools.combinations_with_replacement(range(3), 2))
_QUADS = tuple(itertools.combinations_with_replacement(range(3), 4))


def _sphere_components(b, n, r):
    p, w = _sphere_grid(n)
    wf = w * acg_density(p, b)
    idx = _PAIRS if r == 2 else _QUADS
    out = []
    for multi in idx:
        g = wf
        for i in multi:
            g = g * p[..., i]
        out.append(g.sum())
    return np.array(out)


def sphere_moment(b, r):
    """Moment tensor of order r (2 or 4) of the 3D ACG with B = diag(b).

    Product quadrature on S^2: Gauss-Legendre in cos(theta), uniform in phi,
    with the node count doubled until two refinements agree to 1e-9.
    Returns a (3, 3) array for r = 2 and a ``SymTensor4`` for r = 4.
    """
    if r not in (2, 4):
        raise DomainError(f"sphere_moment: order r must be 2 or 4, got {r!r}")
    b = np.asarray(b, dtype=float)
    if b.shape != (3,) or np.any(b <= 0) or not np.all(np.isfinite(b)):
        raise DomainError(f"sphere_moment: b must be three positive reals, got {b}")
    lo, hi = SPHERE_WINDOW
    if b.min() < lo or b.max() > hi:
        warnings.warn(f"sphere_moment: b={b} outside the accuracy window {SPHERE_WINDOW}")
    n = SPHERE_NODES
    prev = _sphere_components(b, n, r)
    while True:
        n *= 2
        cur = _sphere_components(b, n, r)
        if np.max(np.abs(cur - prev)) < SPHERE_TOL or n >= SPHERE_MAX_NODES:
            break
        prev = cur
    if r == 4:
        return SymTensor4(tuple(float(c) for c in cur))
    m = np.empty((3, 3))
    for (i, j), c in zip(_PAIRS, cur):
        m[i, j] = m[j, i] = c
    return m


def symmetrize4(t):
    """Average of a (3, 3, 3, 3) array over all 24 permutations of its indices."""
    return sum(t.transpose(perm) for perm in itertools.permutations(range(4))) / 24.0


def aiv_t_integral(b):
    """Fourth moment as 3/4 int_0^inf t S((B + tI)^-1 (x) (B + tI)^-1) / sqrt(det(B + tI)) dt.

    ``b`` is either an eigenvalue triple (B = diag(b)) or a symmetric 3x3
    matrix.  The tail beyond t = 1 is integrated in u = 1/t.
    """
    bm = np.asarray(b, dtype=float)
    if bm.shape == (3,):
        bm = np.diag(bm)
    if bm.shape != (3, 3) or np.any(np.linalg.eigvalsh(bm) <= 0):
        raise DomainError("aiv_t_integral: B must be symmetric positive definite")
    eye = np.eye(3)

    def integrand(t):
        m = np.linalg.inv(bm + t * eye)
        return t * symmetrize4(np.multiply.outer(m, m)) / math.sqrt(np.linalg.det(bm + t * eye))

    def tail(u):
        if u == 0.0:
            return np.zeros((3, 3, 3, 3))
        return integrand(1.0 / u) / (u * u)

    total = np.zeros((3, 3, 3, 3))
    for f in (integrand, tail):
        val, err = quad_vec(f, 0.0, 1.0, epsabs=1e-14, epsrel=1e-12, norm="max", limit=2000)
        if err > 1e-10:
            raise ConvergenceError(f"aiv_t_integral: error estimate {err:.3g}", estimate=err)
        total += val
    return SymTensor4.from_array(0.75 * total)


def circle_moment(b_planar, r, tol=1e-13, max_nodes=1 << 16):
    """Moments of the planar (n = 2) ACG with B = diag(b1, b2), b1 b2 = 1.

    Trapezoidal rule in the angle, doubled until converged; spectrally
    accurate for the smooth periodic integrand.  Returns a (2, 2) array for
    r = 2 and a (2, 2, 2, 2) array for r = 4.
    """
    b = np.asarray(b_planar, dtype=float)
    if b.shape != (2,) or np.any(b <= 0):
        raise DomainError(f"circle_moment: need two positive parameters, got {b}")
    if abs(b[0] * b[1] - 1.0) > 1e-10:
        raise DomainError(f"circle_moment: b1*b2 = {b[0] * b[1]!r}, expected 1")
    if r not in (2, 4):
        raise DomainError(f"circle_moment: order r must be 2 or 4, got {r!r}")

    def moments(n):
        phi = 2.0 * np.pi * np.arange(n) / n
        p = np.stack([np.cos(phi), np.sin(phi)], axis=-1)
        f = acg_density(p, b) * (2.0 * np.pi / n)
        if r == 2:
            return np.einsum("n,ni,nj->ij", f, p, p)
        return np.einsum("n,ni,nj,nk,nl->ijkl", f, p, p, p, p)

    n = 64
    prev = moments(n)
    while n < max_nodes:
        n *= 2
        cur = moments(n)
        if np.max(np.abs(cur - prev)) < tol:
            return cur
        prev = cur
    raise ConvergenceError("circle_moment: trapezoid rule did not converge")
