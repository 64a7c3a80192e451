import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from carlsonacg.carlson import rd
from carlsonacg.errors import DomainError
from carlsonacg.lambert import w_m1
from carlsonacg.relation import (
    A_ONE_MIN,
    A_ZERO_MAX,
    arccos_sq_asymptote,
    arccos_sq_relative_error,
    f_axial,
    f_axial_series0,
    inv_asym_zero,
    inv_first_order_one,
    inv_second_order_one,
    lambert_argument,
)

F_AT_HALF = 0.52720028256256984418  # 40-digit evaluation of the arccos closed form
# root of (ln 2x - 1)/x^2 = 1e-4 by bisection on (e^1.5/2, 1e6)
ASYM_ZERO_ROOT_1E_4 = 226.14910376728864


def test_f_axial_at_one():
    assert f_axial(1.0) == 1 / 3
    assert 1.0 * rd(1, 1, 1) / 3 == pytest.approx(1 / 3, rel=1e-15)


def test_f_axial_small_x_limit():
    assert f_axial(1e-8) == pytest.approx(1.0, abs=1e-7)


def test_f_axial_half():
    assert f_axial(0.5) == pytest.approx(F_AT_HALF, rel=1e-15)
    assert f_axial(0.5) == pytest.approx(0.5 * rd(1, 1, 0.25) / 3, rel=1e-14)


def test_lemma_both_branches():
    for x in np.logspace(-3, 3, 100):
        assert f_axial(x) == pytest.approx(x * rd(1, 1, x * x) / 3, rel=1e-12)


def test_lemma_near_one():
    for x in 1 + np.linspace(-0.1, 0.1, 401):
        assert f_axial(x) == pytest.approx(x * rd(1, 1, x * x) / 3, rel=1e-12)


def test_monotone():
    xs = np.logspace(-6, 6, 3000)
    fs = [f_axial(x) for x in xs]
    assert all(b < a for a, b in zip(fs, fs[1:]))


def test_endpoint_limits():
    assert f_axial(1e-8) == pytest.approx(1.0, abs=1e-7)
    assert f_axial(1e8) <= 1e-14
    assert f_axial(1e300) >= 0.0


def test_branch_continuity():
    # d/dx [x R_D(1,1,x^2)/3] at 1 is (1 + 2 * (-9/10))/3 = -4/15
    eps = 1e-6
    slope = (f_axial(1 + eps) - f_axial(1 - eps)) / (2 * eps)
    assert slope == pytest.approx(-4 / 15, rel=1e-8)
    assert f_axial(1 - 1e-12) == pytest.approx(f_axial(1 + 1e-12), abs=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, math.nan, math.inf])
def test_f_axial_domain(x):
    with pytest.raises(DomainError):
        f_axial(x)


def test_series_at_zero():
    assert f_axial_series0(0.0) == 1.0
    assert abs(f_axial_series0(0.05) - f_axial(0.05)) <= 1e-6
    x = 0.1
    expected = 1 - math.pi * x / 2 + 2 * x**2 - 3 * math.pi * x**3 / 4 + 8 * x**4 / 3
    assert f_axial_series0(0.1) == pytest.approx(expected, rel=1e-15)
    with pytest.raises(DomainError):
        f_axial_series0(0.11)


def _bisect_asym_zero(a, lo=math.e**1.5 / 2, hi=1e6):
    g = lambda x: (math.log(2 * x) - 1) / x**2 - a  # noqa: E731  decreasing on the bracket
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if g(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_inv_asym_zero_branch_point():
    assert inv_asym_zero(2 * math.exp(-3)) == pytest.approx(math.exp(1.5) / 2, rel=1e-15)


def test_inv_asym_zero_matches_bisection():
    assert _bisect_asym_zero(1e-4) == pytest.approx(ASYM_ZERO_ROOT_1E_4, rel=1e-14)
    assert inv_asym_zero(1e-4) == pytest.approx(ASYM_ZERO_ROOT_1E_4, rel=1e-10)


@given(st.floats(min_value=1e-12, max_value=A_ZERO_MAX))
def test_inv_asym_zero_two_forms(a):
    w = w_m1(lambert_argument(a))
    assert inv_asym_zero(a) == pytest.approx(math.sqrt(-w / (2 * a)), rel=1e-13)


def test_inv_asym_zero_consistency_improves():
    dev = [abs(f_axial(inv_asym_zero(a)) / a - 1) for a in (1e-3, 1e-6)]
    assert dev[1] < dev[0]


@pytest.mark.parametrize("a", [0.0, -1e-3, A_ZERO_MAX * 1.001])
def test_inv_asym_zero_domain(a):
    with pytest.raises(DomainError):
        inv_asym_zero(a)


def test_first_order_inverse():
    assert inv_first_order_one(1.0) == 0.0
    assert inv_first_order_one(0.9) == pytest.approx(0.2 / math.pi, rel=1e-14)
    assert f_axial(inv_first_order_one(0.999)) == pytest.approx(0.999, abs=5e-6)
    for a in (0.0, 1.1):
        with pytest.raises(DomainError):
            inv_first_order_one(a)


def test_second_order_inverse():
    assert inv_second_order_one(1.0) == pytest.approx(0.0, abs=1e-15)
    assert inv_second_order_one(0.9) == pytest.approx(
        (math.pi - math.sqrt(math.pi**2 - 3.2)) / 8, rel=1e-14
    )
    x = inv_second_order_one(0.95)
    assert 1 - math.pi * x / 2 + 2 * x * x == pytest.approx(0.95, abs=1e-14)
    assert math.isfinite(inv_second_order_one(A_ONE_MIN))
    with pytest.raises(DomainError):
        inv_second_order_one(A_ONE_MIN - 1e-3)


def test_arccos_asymptote():
    assert arccos_sq_asymptote(10) == pytest.approx(-math.log(20) ** 2, rel=1e-15)
    assert arccos_sq_asymptote(10) == pytest.approx(-8.9744, abs=1e-4)
    # Re[(arccos x)^2] = -arccosh(x)^2 with arccosh(x) = ln(x + sqrt(x^2 - 1))
    exact = lambda x: -math.log(x + math.sqrt(x * x - 1)) ** 2  # noqa: E731
    err = [abs(arccos_sq_asymptote(x) / exact(x) - 1) for x in (10, 100, 1000)]
    assert err[0] > err[1] > err[2]
    assert err[2] < 0.01
    with pytest.raises(DomainError):
        arccos_sq_asymptote(1.0)


def test_arccos_sq_relative_error_decreases():
    errs = [arccos_sq_relative_error(x) for x in np.logspace(1, 3, 100)]
    assert all(b < a for a, b in zip(errs, errs[1:]))
