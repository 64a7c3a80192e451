"""Lower real branch W_{-1} of the Lambert W function on [-1/e, 0)."""

import math

from .errors import DomainError

BRANCH_POINT = -math.exp(-1.0)

CF_DEPTH = 8
# below this argument the nested-log initializer is replaced by the
# branch-point series
SERIES_SWITCH = -0.27
MAX_HALLEY = 10


def continued_fraction_guess(x, depth=CF_DEPTH):
    """Nested-logarithm approximation ln(x / ln(x / ln(x / ...))) of W_{-1}(x).

    The innermost term is ln(-x).  Each level contracts the error by roughly
    1/|W_{-1}(x)|, so the approximation is poor close to the branch point.
    """
    w = math.log(-x)
    for _ in range(depth):
        w = math.log(x / w)
    return w


def _branch_point_guess(x):
    p = -math.sqrt(2.0 * (1.0 + math.e * x))
    return -1.0 + p - p * p / 3.0


def _check(x):
    if math.isnan(x) or x < BRANCH_POINT or x >= 0:
        raise DomainError(f"w_m1: argument {x!r} outside [-1/e, 0)")


def w_m1(x):
    """Solve w * exp(w) = x for w <= -1, with x in [-1/e, 0).

    Starts from the nested-logarithm guess (or the square-root series near
    the branch point) and polishes with Halley's method.
    """
    _check(x)
    x = float(x)
    if x == BRANCH_POINT:
        return -1.0
    w = _branch_point_guess(x) if x < SERIES_SWITCH else continued_fraction_guess(x)
    for _ in range(MAX_HALLEY):
        ew = math.exp(w)
        f = w * ew - x
        wp1 = w + 1.0
        if wp1 == 0.0:
            break
        step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1))
        w_new = w - step
        # rounding near the branch point can push the iterate onto W_0
        w = min(w_new, -1.0)
        if abs(step) < 1e-15 * abs(w):
            break
    return w


def w_m1_log_ratio(x):
    """W_{-1}(x) / ln(-x), which tends to 1 as x -> 0-."""
    _check(x)
    return w_m1(x) / math.log(-x)
