"""Carlson symmetric elliptic integrals R_C, R_F, R_D, R_J for real arguments.

All four integrals are evaluated with the duplication theorem: the arguments
are repeatedly replaced by ``(arg + lam) / 4`` with
``lam = sqrt(x)sqrt(y) + sqrt(y)sqrt(z) + sqrt(z)sqrt(x)`` until they agree
to a relative spread of ``SPREAD_TOL``, after which a fifth-order expansion
in the elementary symmetric functions of the normalized deviations finishes
the job.  The spread shrinks by a factor four per step, so even a zero
argument needs only a dozen iterations.
"""

import math
from typing import NamedTuple

from .errors import DomainError

SPREAD_TOL = 1e-6
MAX_DUPLICATIONS = 100

# relative gap below which the divided differences in rd_partials are
# replaced by a symmetric perturbation of the coincident pair
COINCIDENT_GAP = 1e-6
PERTURBATION = 1e-6


class EllipticArgs(NamedTuple):
    x: float
    y: float
    z: float
    p: float = math.nan


def _require_finite(name, **args):
    for key, val in args.items():
        if not math.isfinite(val):
            raise DomainError(f"{name}: argument {key}={val!r} is not finite")


def _require_nonnegative(name, **args):
    _require_finite(name, **args)
    for key, val in args.items():
        if val < 0:
            raise DomainError(f"{name}: argument {key}={val!r} is negative")


def _require_at_most_one_zero(name, **args):
    zeros = [key for key, val in args.items() if val == 0]
    if len(zeros) > 1:
        raise DomainError(f"{name}: arguments {', '.join(zeros)} are all zero; at most one may vanish")


def _spread(mean, *args):
    return max(abs(mean - v) for v in args) / mean


def _rc(x, y):
    mean = (x + 2.0 * y) / 3.0
    for _ in range(MAX_DUPLICATIONS):
        if _spread(mean, x, y) < SPREAD_TOL:
            break
        lam = 2.0 * math.sqrt(x) * math.sqrt(y) + y
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        mean = 0.25 * (mean + lam)
    s = (y - mean) / mean
    series = 1.0 + s * s * (
        0.3 + s * (1.0 / 7.0 + s * (0.375 + s * (9.0 / 22.0 + s * (159.0 / 208.0 + s * 1.125))))
    )
    return series / math.sqrt(mean)


def rc(x, y):
    """Degenerate integral R_C(x, y) = R_F(x, y, y), for x >= 0 and y > 0."""
    _require_nonnegative("rc", x=x, y=y)
    if y == 0:
        raise DomainError("rc: argument y must be positive")
    if x == y:
        return 1.0 / math.sqrt(x)
    return _rc(float(x), float(y))


def _rf(x, y, z):
    mean = (x + y + z) / 3.0
    for _ in range(MAX_DUPLICATIONS):
        if _spread(mean, x, y, z) < SPREAD_TOL:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        mean = 0.25 * (mean + lam)
    dx = (mean - x) / mean
    dy = (mean - y) / mean
    dz = -(dx + dy)
    e2 = dx * dy - dz * dz
    e3 = dx * dy * dz
    series = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    return series / math.sqrt(mean)


def rf(x, y, z):
    """Carlson's integral of the first kind.

    R_F(x, y, z) = 1/2 * int_0^inf dt / sqrt((t + x)(t + y)(t + z))

    Parameters
    ----------
    x, y, z : float
        Nonnegative arguments, at most one of which is zero.

    Returns
    -------
    float
        R_F(x, y, z); relative error below 1e-14 for positive arguments.
    """
    _require_nonnegative("rf", x=x, y=y, z=z)
    _require_at_most_one_zero("rf", x=x, y=y, z=z)
    return _rf(float(x), float(y), float(z))


def _rd_tail(mean, x, y):
    dx = (mean - x) / mean
    dy = (mean - y) / mean
    dz = -(dx + dy) / 3.0
    xy = dx * dy
    zz = dz * dz
    e2 = xy - 6.0 * zz
    e3 = (3.0 * xy - 8.0 * zz) * dz
    e4 = 3.0 * (xy - zz) * zz
    e5 = xy * zz * dz
    return (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )


def _rd(x, y, z):
    mean = (x + y + 3.0 * z) / 5.0
    total = 0.0
    scale = 1.0
    for _ in range(MAX_DUPLICATIONS):
        if _spread(mean, x, y, z) < SPREAD_TOL:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        total += scale / (sz * (z + lam))
        scale *= 0.25
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        mean = 0.25 * (mean + lam)
    return 3.0 * total + scale * _rd_tail(mean, x, y) / (mean * math.sqrt(mean))


def rd(x, y, z):
    """Carlson's degenerate integral of the third kind, R_D(x, y, z) = R_J(x, y, z, z).

    Symmetric in ``x`` and ``y`` only.  Requires ``z > 0`` and at most one of
    ``x``, ``y`` equal to zero.
    """
    _require_nonnegative("rd", x=x, y=y, z=z)
    if z == 0:
        raise DomainError("rd: argument z must be positive")
    _require_at_most_one_zero("rd", x=x, y=y)
    return _rd(float(x), float(y), float(z))


def _rj(x, y, z, p):
    mean = (x + y + z + 2.0 * p) / 5.0
    total = 0.0
    scale = 1.0
    for _ in range(MAX_DUPLICATIONS):
        if _spread(mean, x, y, z, p) < SPREAD_TOL:
            break
        sx, sy, sz = math.sqrt(x), math.sqrt(y), math.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        alpha = p * (sx + sy + sz) + sx * sy * sz
        beta = math.sqrt(p) * (p + lam)
        total += scale * _rc(alpha * alpha, beta * beta)
        scale *= 0.25
        x = 0.25 * (x + lam)
        y = 0.25 * (y + lam)
        z = 0.25 * (z + lam)
        p = 0.25 * (p + lam)
        mean = 0.25 * (mean + lam)
    dx = (mean - x) / mean
    dy = (mean - y) / mean
    dz = (mean - z) / mean
    dp = -(dx + dy + dz) / 2.0
    xyz = dx * dy * dz
    p2 = dp * dp
    e2 = dx * dy + dx * dz + dy * dz - 3.0 * p2
    e3 = xyz + 2.0 * e2 * dp + 4.0 * p2 * dp
    e4 = (2.0 * xyz + e2 * dp + 3.0 * p2 * dp) * dp
    e5 = xyz * p2
    series = (
        1.0
        - 3.0 * e2 / 14.0
        + e3 / 6.0
        + 9.0 * e2 * e2 / 88.0
        - 3.0 * e4 / 22.0
        - 9.0 * e2 * e3 / 52.0
        + 3.0 * e5 / 26.0
    )
    return 3.0 * total + scale * series / (mean * math.sqrt(mean))


def rj(x, y, z, p):
    """Carlson's integral of the third kind for p > 0.

    R_J(x, y, z, p) = 3/2 * int_0^inf dt / ((t + p) sqrt((t + x)(t + y)(t + z)))

    Principal values (p < 0) are not supported.
    """
    _require_nonnegative("rj", x=x, y=y, z=z, p=p)
    if p == 0:
        raise DomainError("rj: argument p must be positive")
    _require_at_most_one_zero("rj", x=x, y=y, z=z)
    return _rj(float(x), float(y), float(z), float(p))


def _dx_quotient(x, y, z):
    # dR_D/dx(x, y, z) as a divided difference of two R_D values
    return (_rd(y, z, x) - _rd(x, y, z)) / (2.0 * (x - z))


def _dx(x, y, z):
    if abs(x - z) > COINCIDENT_GAP * max(x, z):
        return _dx_quotient(x, y, z)
    h = PERTURBATION * x
    return 0.5 * (_dx_quotient(x + h, y, z) + _dx_quotient(x - h, y, z))


def rd_partials(x, y, z):
    """Gradient of R_D with respect to its three arguments.

    The derivatives with respect to the symmetric pair are divided differences
    of R_D with permuted arguments; the derivative with respect to ``z``
    follows from the homogeneity relation
    ``dz = -3/2 x^(-1/2) y^(-1/2) z^(-3/2) - dx - dy``.

    When ``x`` or ``y`` coincides with ``z`` the quotient is averaged over a
    symmetric perturbation of relative size 1e-6, which is accurate to about
    1e-10 relative.  All arguments must be strictly positive.

    Returns
    -------
    tuple of float
        ``(dR_D/dx, dR_D/dy, dR_D/dz)``
    """
    _require_finite("rd_partials", x=x, y=y, z=z)
    for key, val in (("x", x), ("y", y), ("z", z)):
        if val <= 0:
            raise DomainError(f"rd_partials: argument {key}={val!r} must be positive")
    x, y, z = float(x), float(y), float(z)
    dx = _dx(x, y, z)
    dy = _dx(y, x, z)
    dz = -1.5 / (math.sqrt(x) * math.sqrt(y) * z * math.sqrt(z)) - dx - dy
    return dx, dy, dz
