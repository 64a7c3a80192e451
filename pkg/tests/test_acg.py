import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from carlsonacg import acg
from carlsonacg.errors import ConsistencyError, DomainError, MethodMismatchError
from carlsonacg.relation import A_ONE_MIN, A_ZERO_MAX, f_axial, inv_asym_zero
from carlsonacg.tensors import ClosureMethod

# 40-digit mpmath evaluations of R_D(b_j, b_k, b_i)/3 and the divided differences at b = (2, 1, 1/2)
A_AT_2_1_HALF = (0.20589132250241837135, 0.32004133903764981240, 0.47406733845993181625)
A1122_AT_2_1_HALF = 0.045870652983593465156
A1111_AT_2_1_HALF = 0.10177101092720129467

log_b = st.floats(min_value=math.log(0.05), max_value=math.log(20.0))


def det_one(u1, u2):
    return np.exp([u1, u2, -u1 - u2])


def test_a_from_b_frozen():
    a = acg.a_from_b((2.0, 1.0, 0.5))
    for got, ref in zip(a, A_AT_2_1_HALF):
        assert got == pytest.approx(ref, rel=1e-14)


def test_a_from_b_isotropic():
    assert acg.a_from_b((1, 1, 1)) == pytest.approx((1 / 3,) * 3, rel=1e-15)


@given(log_b, log_b)
def test_a_on_simplex_and_ordered(u1, u2):
    b = det_one(u1, u2)
    a = np.array(acg.a_from_b(b))
    assert a.sum() == pytest.approx(1.0, abs=1e-13)
    assert np.all(a > 0)
    # larger b_i concentrates less mass on axis i
    order = np.argsort(b)
    assert np.all(np.diff(a[order]) <= 1e-15)


def test_normalize_b():
    with pytest.raises(DomainError):
        acg.normalize_b((2.0, 1.0, 1.0))
    with pytest.raises(DomainError):
        acg.normalize_b((1.0, -1.0, -1.0))
    b = acg.normalize_b((2.0, 1.0, 0.5 * (1 + 5e-9)))
    assert np.prod(b) == pytest.approx(1.0, abs=1e-15)


def test_normalize_a():
    with pytest.raises(DomainError):
        acg.normalize_a((0.5, 0.5, 0.5))
    with pytest.raises(DomainError):
        acg.normalize_a((1.2, -0.1, -0.1))
    assert sum(acg.normalize_a((0.5, 0.25, 0.25 + 5e-9))) == pytest.approx(1.0, abs=1e-16)


@given(log_b, log_b)
@settings(max_examples=50, deadline=None)
def test_newton_roundtrip(u1, u2):
    b = det_one(u1, u2)
    res = acg.newton_b_from_a(acg.a_from_b(b))
    np.testing.assert_allclose(res.b, b, rtol=1e-9)
    assert res.iterations <= 30


def test_newton_interior_only():
    with pytest.raises(DomainError):
        acg.newton_b_from_a((0.5, 0.5, 0.0))


def test_axial_forward_invert():
    assert acg.axial_forward(1.0) == pytest.approx(1 / 3, rel=1e-15)
    for beta in (1e-3, 0.3, 2.0, 1e3):
        a = acg.axial_forward(beta)
        assert acg.axial_invert(a) == pytest.approx(beta, rel=1e-10)
        av, bv = acg.axial_b(a, beta)
        np.testing.assert_allclose(acg.a_from_b(bv), av, rtol=1e-12)


def test_axial_invert_agrees_with_asymptotic_inverse():
    x = acg.axial_invert(1e-4) ** 0.75
    assert x == pytest.approx(inv_asym_zero(1e-4), rel=1e-4)


def test_axial_invert_domain():
    for a in (0.0, 1.0, -0.5):
        with pytest.raises(DomainError):
            acg.axial_invert(a)


def test_exact_closure_frozen():
    b = (2.0, 1.0, 0.5)
    t = acg.exact_closure(acg.a_from_b(b), b)
    assert t[(0, 0, 1, 1)] == pytest.approx(A1122_AT_2_1_HALF, rel=1e-12)
    assert t[(0, 0, 0, 0)] == pytest.approx(A1111_AT_2_1_HALF, rel=1e-12)
    assert t.max_odd_component() == 0.0


def test_exact_closure_inconsistent():
    with pytest.raises(ConsistencyError):
        acg.exact_closure((0.2, 0.3, 0.5), (2.0, 1.0, 0.5))


def test_degenerate_pair_continuity():
    beta = 0.2
    av, bv = acg.axial_b(acg.axial_forward(beta), beta)
    base = np.array(acg.exact_closure(av, bv).values)
    for gap in (1e-9, 1e-8, 1e-6):
        b = np.array([beta, beta**-0.5 * (1 + gap), beta**-0.5 / (1 + gap)])
        t = np.array(acg.exact_closure(acg.a_from_b(b), b).values)
        assert np.max(np.abs(t - base)) <= 1e-6


def test_degenerate_matches_nearby_divided_difference():
    # the analytic limit must agree with the plain quotient just outside the switch
    c, bk = 1.3, 1 / 1.3**2
    inner = acg._pair_limit(c, bk)
    h = 1e-4 * c
    b = np.array([c + h, c - h, 0.0])
    b[2] = 1.0 / (b[0] * b[1])
    a = acg.a_from_b(b)
    outer = (a[0] * b[0] - a[1] * b[1]) / (b[0] - b[1])
    assert inner == pytest.approx(outer, rel=1e-6)


def test_planar():
    b = acg.planar_b_from_a((0.25, 0.75, 0.0))
    assert b[0] == pytest.approx(3.0) and b[1] == pytest.approx(1 / 3) and b[2] == math.inf
    t = acg.planar_closure((0.25, 0.75, 0.0))
    assert t[(0, 0, 0, 0)] == pytest.approx(0.25 * 1.25 / 2)
    assert t[(0, 0, 1, 1)] == pytest.approx(0.25 * 0.75 / 2)
    assert t[(2, 2, 2, 2)] == 0.0
    with pytest.raises(DomainError):
        acg.planar_b_from_a((0.2, 0.3, 0.5))


def test_unidirectional():
    t = acg.closure((1.0, 0.0, 0.0), ClosureMethod.UNIDIRECTIONAL)
    assert t[(0, 0, 0, 0)] == 1.0
    assert sum(t.values) == 1.0
    assert acg.solve_b((0, 1, 0)) == (math.inf, 0.0, math.inf)


def test_isotropic():
    t = acg.closure((1 / 3, 1 / 3, 1 / 3))
    for i in range(3):
        assert t[(i, i, i, i)] == pytest.approx(0.2, abs=1e-8)
    assert t[(0, 0, 1, 1)] == pytest.approx(1 / 15, abs=1e-8)


def test_asymptote_domains():
    for fn, bad in [
        (acg.aiiii_asym1, A_ZERO_MAX * 1.01),
        (acg.aiiii_asym2, 0.3),
        (acg.aiiii_asym4, 1.1),
        (acg.aiiii_asym5, A_ONE_MIN - 1e-3),
    ]:
        with pytest.raises(DomainError):
            fn(bad)


def test_asym1_asym2_coincide_at_branch_point():
    a = A_ZERO_MAX
    assert acg.aiiii_asym1(a) == pytest.approx(acg.aiiii_asym2(a), rel=1e-12)
    assert acg.aiiii_asym1(1e-4) != pytest.approx(acg.aiiii_asym2(1e-4), rel=1e-3)


def test_asymptotes_at_a_one():
    for fn in (acg.aiiii_asym4, acg.aiiii_asym5):
        assert fn(1.0) == 1.0


def test_axial_closed_form():
    # on the symmetry line A_iiii = (1 - 3a)/(2(beta^{3/2} - 1)) with a = f(beta^{3/4})
    for beta in (0.01, 0.5, 3.0, 200.0):
        a = acg.axial_forward(beta)
        ref = (1 - 3 * a) / (2 * (beta**1.5 - 1))
        assert acg.exact_axial_aiiii(a) == pytest.approx(ref, rel=1e-9)


def test_transverse_block_matches_exact():
    a = acg.axial_forward(4.0)
    av, bv = acg.axial_b(a, 4.0)
    exact = acg.exact_closure(av, bv)
    rebuilt = acg.axial_closure(av, exact[(0, 0, 0, 0)])
    np.testing.assert_allclose(rebuilt.values, exact.values, atol=1e-9)
    assert exact[(1, 1, 1, 1)] == pytest.approx(3 * exact[(1, 1, 2, 2)], rel=1e-8)


def test_asym_ordering_near_one():
    for a in np.linspace(0.97, 0.9999, 30):
        exact = acg.exact_axial_aiiii(a)
        e4 = abs(acg.aiiii_asym4(a) / exact - 1)
        e5 = abs(acg.aiiii_asym5(a) / exact - 1)
        assert e5 <= e4


def test_closure_dispatch_and_mismatch():
    a = (0.2, 0.3, 0.5)
    t = acg.closure(a)
    np.testing.assert_allclose(t.contraction(), a, atol=1e-12)
    with pytest.raises(MethodMismatchError):
        acg.closure(a, ClosureMethod.PLANAR)
    with pytest.raises(MethodMismatchError):
        acg.closure(a, ClosureMethod.ASYM4)
    with pytest.raises(MethodMismatchError):
        acg.closure((0.5, 0.5, 0.0), ClosureMethod.UNIDIRECTIONAL)
    with pytest.raises(ValueError):
        acg.closure(a, "bogus")
    axial = (0.98, 0.01, 0.01)
    t4 = acg.closure(axial, "asym4")
    assert t4[(0, 0, 0, 0)] == pytest.approx(acg.aiiii_asym4(0.98), rel=1e-15)


@given(st.floats(min_value=0.02, max_value=0.9), st.floats(min_value=0.05, max_value=0.95))
@settings(max_examples=40, deadline=None)
def test_closure_contraction_property(s, frac):
    a = np.array([s, (1 - s) * frac, (1 - s) * (1 - frac)])
    t = acg.closure(a)
    np.testing.assert_allclose(t.contraction(), a, atol=1e-12)
    m = t.iijj()
    assert np.all(m >= -1e-15)


def test_axial_invert_near_one():
    from carlsonacg.relation import inv_first_order_one

    x = acg.axial_invert(0.999) ** 0.75
    assert x == pytest.approx(inv_first_order_one(0.999), abs=1e-4)
    assert f_axial(x) == pytest.approx(0.999, rel=1e-14)
