"""Exact rational polynomial arithmetic."""

from .grading import weighted_degree
from .polynomial import VARIABLES, MultiPoly, format_in, poly_arith, symbols
from .resultant import bareiss_determinant, resultant, sylvester_matrix
from .symmetric import reduce_y0, symmetric_reduce
from .univariate import UniPolyView

__all__ = [
    "VARIABLES",
    "MultiPoly",
    "UniPolyView",
    "bareiss_determinant",
    "format_in",
    "poly_arith",
    "reduce_y0",
    "resultant",
    "sylvester_matrix",
    "symbols",
    "symmetric_reduce",
    "weighted_degree",
]
