"""Exact operator formulas for monotone triangles and alternating sign matrices."""
from .ring import LaurentPQ, RatFuncPQ, eval_pq, normalize, to_laurent
from .spaces import KPoly, XPoly
from .operators import (
    SpecSet,
    apply_basic_op,
    definite_p_sum,
    merge_vars,
    pbinom_det,
    pbinom_xpoly,
    v_apply,
    v_product,
)
from .alpha import (
    AlphaSpec,
    alpha_closed,
    alpha_closed_xpoly,
    alpha_recursive,
    classical_formula,
    p_genfun,
    spec_from_s_polynomial,
)
from .triangles import (
    STrianglePattern,
    TriArray,
    enumerate_gt,
    enumerate_monotone,
    p_weight_weak_brute,
    q_weight_brute,
    s_sum_brute,
    s_triangle_weight,
)
from .recursions import Variant, alpha_point_recursion, indicator_coeffs, top_row_count_via_alpha
from .asm import AsmMatrix, PartialAsm, asm_counts, asm_to_mt, mt_to_asm, two_enum

__version__ = "0.1.0"
