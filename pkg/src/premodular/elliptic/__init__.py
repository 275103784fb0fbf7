"""Weierstrass data from q-series and numerical points of the Liouville curve."""

from .curve import (CurvePointNumeric, MaierReport, ell_value, maier_check, monodromy_exponents,
                    sample_liouville_point, wp_inverse)
from .roots import poly_roots
from .torus import TorusContext, TorusPoint

__all__ = [
    "CurvePointNumeric", "MaierReport", "TorusContext", "TorusPoint", "ell_value",
    "maier_check", "monodromy_exponents", "poly_roots", "sample_liouville_point", "wp_inverse",
]
