"""Simultaneous polynomial root finding (Aberth-Ehrlich)."""

from __future__ import annotations

import numpy as np

from ..errors import ArgumentError, ConvergenceError


def _initial(coeffs):
    n = len(coeffs) - 1
    a = np.abs(coeffs[1:] / coeffs[0])
    radius = float(np.max(a ** (1.0 / np.arange(1, n + 1)))) or 1.0
    centre = -coeffs[1] / (n * coeffs[0])
    angles = 2 * np.pi * np.arange(n) / n + 0.4  # offset breaks real-axis symmetry
    return centre + radius * np.exp(1j * angles)


def poly_roots(coeffs, tol=1e-10, max_iter=500):
    """All complex roots of sum coeffs[k] x^(n-k) (highest power first)."""
    c = np.asarray(coeffs, dtype=complex)
    if c.ndim != 1 or len(c) == 0:
        raise ArgumentError("coefficients must be a non-empty sequence")
    if c[0] == 0:
        raise ArgumentError("leading coefficient must be nonzero")
    n = len(c) - 1
    if n == 0:
        return []
    if n == 1:
        return [complex(-c[1] / c[0])]
    # rescale x = rho u so the roots have modulus of order one
    rho = float(np.max(np.abs(c[1:] / c[0]) ** (1.0 / np.arange(1, n + 1)))) or 1.0
    c = c / c[0] * rho ** -np.arange(n + 1)
    dc = np.polyder(c)
    norm = float(np.linalg.norm(c))
    z = _initial(c)
    for _ in range(max_iter):
        p = np.polyval(c, z)
        ratio = p / np.polyval(dc, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        corr = ratio / (1 - ratio * np.sum(1 / diff, axis=1))
        z = z - corr
        # relative to |z|, so roots much smaller than rho are also resolved
        if np.all(np.abs(corr) <= 1e-14 * np.abs(z) + 1e-30):
            break
    for _ in range(2):  # Newton polish; skipped where the derivative vanishes
        d = np.polyval(dc, z)
        ok = np.abs(d) > 1e-8 * norm
        z = np.where(ok, z - np.polyval(c, z) / np.where(ok, d, 1), z)
    resid = np.abs(np.polyval(c, z)) / (norm * np.maximum(1.0, np.abs(z)) ** n)
    if not np.all(resid < tol):
        raise ConvergenceError(f"root finder did not converge (max residual {resid.max():.3g})")
    return [complex(x) * rho for x in z]
