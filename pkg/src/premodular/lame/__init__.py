"""Spectral data of the Lamé curve and the resultant elimination."""

from .spectral import (
    ConsistencyPair,
    SpectralCoeffs,
    apply_tensor_ode,
    assemble_ell,
    consistency_polys,
    solve_spectral_coeffs,
)
from .tables import SpectralTables, factored_ell, load_tables

__all__ = [
    "ConsistencyPair",
    "SpectralCoeffs",
    "SpectralTables",
    "apply_tensor_ode",
    "assemble_ell",
    "consistency_polys",
    "factored_ell",
    "load_tables",
    "solve_spectral_coeffs",
]
