"""The scalar function f(x) = x R_D(1, 1, x^2) / 3 and its approximate inverses.

f equals one half of the second derivative of arccos(x)^2, which gives
closed forms on (0, 1) (arccos) and on (1, inf) (arccosh).  It decreases
strictly from 1 at x = 0+ through 1/3 at x = 1 to 0 at infinity.
"""

import math

from .errors import DomainError
from .lambert import w_m1

# Taylor coefficients of f about x = 1, in powers of (x - 1)
_SERIES_AT_ONE = (
    1 / 3,
    -4 / 15,
    6 / 35,
    -32 / 315,
    40 / 693,
    -32 / 1001,
    112 / 6435,
    -1024 / 109395,
    1152 / 230945,
    -2560 / 969969,
    2816 / 2028117,
    -12288 / 16900975,
)
SERIES_WINDOW = 0.05

# coefficients of the Taylor polynomial of f at x = 0
_SERIES_AT_ZERO = (1.0, -math.pi / 2, 2.0, -3 * math.pi / 4, 8 / 3)

# upper end of the range where the W_{-1} inverse is defined
A_ZERO_MAX = 2.0 * math.exp(-3.0)
# lower end of the range where the second-order inverse at a = 1 is real
A_ONE_MIN = 1.0 - math.pi**2 / 32.0


def _horner(coeffs, h):
    acc = 0.0
    for c in reversed(coeffs):
        acc = acc * h + c
    return acc


def f_axial(x):
    """Evaluate x R_D(1, 1, x^2) / 3 in closed form for x > 0."""
    if not math.isfinite(x) or x <= 0:
        raise DomainError(f"f_axial: argument {x!r} must be positive and finite")
    x = float(x)
    h = x - 1.0
    if abs(h) < SERIES_WINDOW:
        return _horner(_SERIES_AT_ONE, h)
    if x < 1.0:
        # 1 - x^2 = (1 - x)(1 + x) avoids rounding in the square
        s = -h * (1.0 + x)
        return 1.0 / s - x * math.acos(x) / (s * math.sqrt(s))
    # written in t = 1/x so that huge x cannot overflow
    t = 1.0 / x
    s = (1.0 - t) * (1.0 + t)
    return t * t * (math.acosh(x) / (s * math.sqrt(s)) - 1.0 / s)


def f_axial_series0(x):
    """Degree-4 Taylor polynomial of f_axial at 0, for 0 <= x <= 0.1."""
    if not 0.0 <= x <= 0.1:
        raise DomainError(f"f_axial_series0: argument {x!r} outside [0, 0.1]")
    return _horner(_SERIES_AT_ZERO, x)


def inv_asym_zero(a):
    """Large root of a = (ln(2x) - 1) / x^2, the inverse of f as a -> 0+.

    x = (e/2) exp(-W_{-1}(-e^2 a / 2) / 2); defined for 0 < a <= 2 e^-3.
    """
    if not (a > 0 and a <= A_ZERO_MAX):
        raise DomainError(f"inv_asym_zero: a={a!r} outside (0, 2e^-3]")
    return 0.5 * math.e * math.exp(-0.5 * w_m1(lambert_argument(a)))


def lambert_argument(a):
    """-e^2 a / 2, scaled so that a = 2 e^-3 maps exactly onto the branch point -1/e."""
    return -(a / A_ZERO_MAX) * math.exp(-1.0)


def inv_first_order_one(a):
    """First-order inverse near a = 1: x = 2 (1 - a) / pi."""
    if not (a > 0 and a <= 1):
        raise DomainError(f"inv_first_order_one: a={a!r} outside (0, 1]")
    return 2.0 * (1.0 - a) / math.pi


def inv_second_order_one(a):
    """Small root of a = 1 - pi x / 2 + 2 x^2."""
    radicand = 32.0 * a + math.pi**2 - 32.0
    if math.isnan(radicand) or radicand < 0 or a > 1:
        raise DomainError(f"inv_second_order_one: a={a!r} outside [1 - pi^2/32, 1]")
    return (math.pi - math.sqrt(radicand)) / 8.0


def arccos_sq_asymptote(x):
    """Large-x asymptote -(ln 2x)^2 of (arccos x)^2 (whose real part is -arccosh(x)^2)."""
    if not (math.isfinite(x) and x > 1):
        raise DomainError(f"arccos_sq_asymptote: x={x!r} must exceed 1")
    return -math.log(2.0 * x) ** 2


def re_arccos_sq(x):
    """Real part of (arccos x)^2 for real x >= 0."""
    if x <= 1.0:
        return math.acos(x) ** 2
    return -math.acosh(x) ** 2


def arccos_sq_relative_error(x):
    """Relative deviation between Re[(arccos x)^2] and -(ln 2x)^2, symmetric form."""
    exact = re_arccos_sq(x)
    approx = math.log(2.0 * x) ** 2
    return (exact + approx) / (abs(exact) + approx)
