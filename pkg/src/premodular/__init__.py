"""Exact pre-modular polynomials of the Lamé curve and their numerical checks."""

__version__ = "0.1.0"
