"""Points of the Liouville curve over a fixed sigma, and the Green-equation residual."""

from __future__ import annotations

import dataclasses

from ..elliptic.curve import CurvePointNumeric, sample_liouville_point
from ..elliptic.roots import poly_roots
from ..errors import ConstructionError
from ..lame.elimination import build_fg


def negate_point(pt):
    """The point -a: sigma, z_n and C change sign."""
    ctx = pt.ctx
    return dataclasses.replace(
        pt,
        a=tuple(-z for z in pt.a),
        C=-pt.C,
        sigma=ctx.point(-pt.sigma_raw),
        sigma_raw=-pt.sigma_raw,
        zn=-pt.zn,
        zeta_sum=-pt.zeta_sum,
    )


def _same_point(ctx, a, b, tol):
    r, s = ctx.rs(a - b)
    return abs(r - round(r)) < tol and abs(s - round(s)) < tol


def _numeric_B_poly(p, vals):
    return [c.evaluate(vals) if c else 0j for c in reversed(p.coefficients("B"))]


def fiber_points(n, sigma, ctx, tol=1e-7):
    """All points a over sigma: one per root B of f at x0 = wp(sigma), with sigma(a) = sigma."""
    f, _ = build_fg(n)
    x0 = ctx.wp(sigma)
    coeffs = _numeric_B_poly(f, {"x0": x0, "g2": ctx.g2, "g3": ctx.g3})
    out = []
    for B in poly_roots(coeffs):
        pt = sample_liouville_point(n, B, ctx)
        if not _same_point(ctx, pt.sigma_raw, sigma, tol):
            pt = negate_point(pt)
        if not _same_point(ctx, pt.sigma_raw, sigma, tol):
            raise ConstructionError("fiber point does not lie over sigma")
        out.append(pt)
    return out


def green_residual(pt: CurvePointNumeric):
    """Z(sigma_n(a)) - z_n(a); zero exactly for solutions of the Green equation."""
    ctx = pt.ctx
    r, s = ctx.rs(pt.sigma_raw)
    return ctx.hecke_Z(r, s) - pt.zn


def reconstruct_from_zero(n, r, s, ctx, tol=1e-7):
    """The point a over sigma = r + s tau whose z_n equals Z_{r,s}(tau)."""
    sigma = ctx.from_rs(r, s)
    Z = ctx.hecke_Z(r, s)
    pts = fiber_points(n, sigma, ctx, tol)
    return min(pts, key=lambda p: abs(p.zn - Z))
