"""Evaluation of Z_n = W_n(Z), zeros in tau, cusp behaviour and level-N counts."""

from .counting import CountReport, arith_functions, count_table, counting, psi, totient
from .cusp import CuspFit, closed_form_leading, cusp_classes, cusp_expansion, nu_infinity_numeric
from .evaluator import PremodularEvaluator, eval_Zn, exact_W, magnitude_scale, specialized_W
from .fiber import fiber_points, green_residual, negate_point, reconstruct_from_zero
from .zeros import ZeroRecord, ZeroSearch, find_zeros, winding_number

__all__ = [
    "CountReport", "CuspFit", "PremodularEvaluator", "ZeroRecord", "ZeroSearch",
    "arith_functions", "closed_form_leading", "count_table", "counting", "cusp_classes",
    "cusp_expansion", "eval_Zn", "exact_W", "fiber_points", "find_zeros", "green_residual",
    "magnitude_scale", "negate_point", "nu_infinity_numeric", "psi", "reconstruct_from_zero",
    "specialized_W", "totient", "winding_number",
]
