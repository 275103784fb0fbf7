"""Weighted degrees in the two gradings used throughout the package.

``S`` is the spectral grading (B, e_i, alpha, beta of weight 1, g2 of 2,
g3 of 3).  ``M`` is the modular grading (z of weight 1, x0 of 2, y0 of 3,
g2 of 4, g3 of 6); B, e_i, alpha and beta carry weight 2 there so the two
gradings agree up to the factor 2 on the variables they share.
"""

from ..errors import ArgumentError
from .polynomial import VARIABLES

WEIGHTS = {
    "S": {"B": 1, "g2": 2, "g3": 3, "e1": 1, "e2": 1, "e3": 1,
          "x0": 0, "y0": 0, "z": 0, "alpha": 1, "beta": 1},
    "M": {"B": 2, "g2": 4, "g3": 6, "e1": 2, "e2": 2, "e3": 2,
          "x0": 2, "y0": 3, "z": 1, "alpha": 2, "beta": 2},
}


def monomial_weight(exps, grading):
    w = WEIGHTS[grading]
    return sum(e * w[v] for v, e in zip(VARIABLES, exps))


def weighted_degree(p, grading):
    """Return ``(min_weight, max_weight, is_homogeneous)`` of a nonzero polynomial."""
    if grading not in WEIGHTS:
        raise ArgumentError(f"unknown grading {grading!r}")
    if p.is_zero():
        raise ArgumentError("the zero polynomial has no weighted degree")
    ws = {monomial_weight(e, grading) for e in p.terms}
    lo, hi = min(ws), max(ws)
    return lo, hi, lo == hi
