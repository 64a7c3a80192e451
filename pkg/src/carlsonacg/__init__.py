"""Carlson symmetric elliptic integrals, the R_D(1, 1, x^2) relation and the exact ACG closure."""

from .acg import (
    a_from_b,
    aiiii_asym1,
    aiiii_asym2,
    aiiii_asym4,
    aiiii_asym5,
    axial_forward,
    axial_invert,
    b_from_a,
    closure,
    exact_closure,
    planar_b_from_a,
    planar_closure,
)
from .carlson import rc, rd, rd_partials, rf, rj
from .errors import ConsistencyError, ConvergenceError, DomainError, MethodMismatchError
from .lambert import w_m1, w_m1_log_ratio
from .relation import (
    arccos_sq_asymptote,
    f_axial,
    f_axial_series0,
    inv_asym_zero,
    inv_first_order_one,
    inv_second_order_one,
)
from .tensors import ClosureMethod, EigenTriple, SymTensor4

__version__ = "0.1.0"
