"""Numerical points of the Liouville curve and the addition-map identities."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from ..errors import ArgumentError, ConstructionError, ConvergenceError, PoleError
from ..lame.spectral import solve_spectral_coeffs
from ..lame.tables import load_tables
from .roots import poly_roots
from .torus import TorusContext, TorusPoint

_GRID = 24


def _converter(ctx):
    if ctx.dps is None:
        return complex
    mp = ctx.ops.ctx
    return lambda q: mp.mpf(q.numerator) / q.denominator


@lru_cache(maxsize=64)
def _inverse_grid(ctx):
    # wp is even: half a period cell suffices
    pts = []
    for i in range(_GRID):
        for j in range(_GRID // 2 + 1):
            r, s = (i + 0.5) / _GRID - 0.5, j / _GRID
            if i == _GRID // 2 - 1 and j == 0:
                continue
            z = ctx.from_rs(r, s)
            pts.append((z, ctx.wp(z)))
    return pts


def wp_inverse(x, ctx, sign_hint=None, max_iter=80):
    """z in the fundamental cell with wp(z) = x; if ``sign_hint`` is given, wp'(z) is on its side."""
    x = ctx.ops.num(x)
    tol = 1e-13 if ctx.dps is None else 10.0 ** (-ctx.dps + 5)
    scale = 1 + abs(x)
    if abs(x) > 1e4:
        z = 1 / ctx.ops.ctx.sqrt(x) if ctx.dps else x ** -0.5
    else:
        z = min(_inverse_grid(ctx), key=lambda p: abs(p[1] - x))[0]
    for _ in range(max_iter):
        w, dw, _ = ctx.weierstrass(z)
        err = w - x
        if abs(err) < tol * scale:
            break
        if dw == 0:
            raise ConvergenceError("wp' vanishes during inversion")
        step = err / dw
        # keep Newton inside the region where the reduced series is used
        if abs(step) > 0.25:
            step *= 0.25 / abs(step)
        z = z - step
    else:
        if abs(ctx.wp(z) - x) >= 1e-10 * scale:
            raise ConvergenceError(f"wp inversion did not converge at x = {x}")
    if sign_hint is not None:
        dw = ctx.wp_prime(z)
        if (dw.conjugate() * sign_hint).real < 0:
            z = -z
    return ctx.point(z)


@dataclass(frozen=True)
class CurvePointNumeric:
    n: int
    ctx: TorusContext
    a: tuple            # representatives a_1..a_n (not reduced)
    x: tuple            # wp(a_i)
    B: complex
    C: complex
    sigma: TorusPoint   # reduced sum
    sigma_raw: complex  # sum of the representatives
    zn: complex         # zeta(sigma_raw) - sum zeta(a_i)
    zeta_sum: complex
    residual: tuple     # |sum wp'(a_i) wp(a_i)^r| / scale, r = 0..n-2
    ell_residual: float  # |C^2 - ell_n(B)| / scale


def _spectral_values(n, B, ctx):
    conv = _converter(ctx)
    sc = solve_spectral_coeffs(n)
    vals = {"alpha": 0, "beta": 2 * B, "g2": ctx.g2, "g3": ctx.g3}
    return [sc[k].evaluate(vals, conv) for k in range(n + 1)]


def ell_value(n, B, ctx):
    s = _spectral_values(n, B, ctx)
    g2, g3 = ctx.g2, ctx.g3
    sm2 = s[n - 2] if n >= 2 else 0
    return 4 * B * s[n] ** 2 + 4 * g3 * sm2 * s[n] - g2 * s[n - 1] * s[n] - g3 * s[n - 1] ** 2


def _relation_residuals(dws, xs):
    out = []
    for r in range(len(xs) - 1):
        total = sum(d * x ** r for d, x in zip(dws, xs))
        scale = sum(abs(d) * abs(x) ** r for d, x in zip(dws, xs)) or 1.0
        out.append(abs(total) / scale)
    return out


def sample_liouville_point(n, B, ctx, tol=1e-9):
    """The point a of the Liouville curve over B, with wp'(a_1) branch fixed by the first root.

    The overall sign a -> -a is a symmetry of the defining equations, so the
    first point is kept on the inverse returned by ``wp_inverse``.
    """
    if not 1 <= n <= 4:
        raise ArgumentError("sample points are supported for 1 <= n <= 4")
    B = ctx.ops.num(B)
    s = _spectral_values(n, B, ctx)
    coeffs = [(-1) ** k * s[k] for k in range(n + 1)]
    if ctx.dps is None:
        xs = poly_roots(coeffs)
    else:
        xs = list(ctx.ops.ctx.polyroots(coeffs, maxsteps=200, extraprec=2 * ctx.dps))
    size = max(1.0, max(abs(x) for x in xs))
    for i, j in itertools.combinations(range(n), 2):
        if abs(xs[i] - xs[j]) < 1e-6 * size:
            raise ConstructionError("q(x) has a (nearly) repeated root; choose another B")
    for x in xs:
        for e in ctx.e:
            if abs(x - e) < 1e-7 * size:
                raise ConstructionError("a root of q(x) sits at a half period; choose another B")
    base = [wp_inverse(x, ctx).z for x in xs]
    dws = [ctx.wp_prime(z) for z in base]
    ranked = []
    for signs in itertools.product((1, -1), repeat=n - 1):
        eps = (1,) + signs
        res = _relation_residuals([e * d for e, d in zip(eps, dws)], xs)
        ranked.append((max(res, default=0.0), eps, res))
    ranked.sort(key=lambda t: t[0])
    best, eps, res = ranked[0]
    if best > tol or (len(ranked) > 1 and best > 1e-3 * ranked[1][0]):
        raise ConstructionError(f"no unambiguous branch choice (best residual {best:.3g})")
    a = tuple(e * z for e, z in zip(eps, base))
    dws = [e * d for e, d in zip(eps, dws)]
    Cs = []
    for i in range(n):
        c = dws[i]
        for j in range(n):
            if j != i:
                c *= xs[i] - xs[j]
        Cs.append(c)
    C = Cs[0]
    if any(abs(c - C) > 1e-7 * max(abs(C), 1.0) for c in Cs):
        raise ConstructionError("C(a) differs across i")
    sigma_raw = sum(a)
    zeta_sum = sum(ctx.zeta(z) for z in a)
    zn = ctx.zeta(sigma_raw) - zeta_sum
    ell = ell_value(n, B, ctx)
    ell_res = abs(C * C - ell) / max(abs(ell), abs(C * C), 1.0)
    return CurvePointNumeric(n, ctx, a, tuple(xs), B, C, ctx.point(sigma_raw), sigma_raw,
                             zn, zeta_sum, tuple(res), float(ell_res))


@dataclass(frozen=True)
class MaierReport:
    x0: tuple          # one value per species i = 1, 2, 3
    y0: complex
    kappa: complex
    wp_sigma: complex
    wp_prime_sigma: complex
    err_x: float
    err_y: float
    err_kappa: float
    cross_i: float


def _rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


def maier_check(pt):
    """Compare the closed-form covering maps with wp(sigma), wp'(sigma) and -z_n."""
    n, ctx = pt.n, pt.ctx
    t = load_tables(n)
    conv = _converter(ctx)
    base = {"B": pt.B, "g2": ctx.g2, "g3": ctx.g3}

    def ev(p, e=None):
        vals = dict(base)
        if e is not None:
            vals["e1"] = e
        return p.evaluate(vals, conv)

    l0, lt0, lth = ev(t.l0), ev(t.lt0), ev(t.l_theta)
    den = l0 * lt0
    if abs(den) < 1e-12 * max(1.0, abs(pt.B)) ** (t.l0.degree("B") + t.lt0.degree("B")):
        raise PoleError("B is a zero of l_0 lt_0")
    k = n * n * (n + 1) ** 2
    x0s, lt_prod = [], 1
    for e in ctx.e:
        li, lti = ev(t.l_species, e), ev(t.lt_species, e)
        x0s.append(e + 4 * li * lti * lti / (k * l0 * lt0 * lt0))
        lt_prod *= lti
    # with C = wp'(a_i) prod (wp(a_i) - wp(a_j)) the maps need c_n = (-1)^(n-1) |c_n|
    nu = (-1) ** (n - 1) * pt.C / conv(t.c)
    y0 = 16 * nu * lt_prod / (n ** 3 * (n + 1) ** 3 * l0 * l0 * lt0 ** 3)
    kappa = -((n - 1) * (n + 2)) * nu * lth / (n * (n + 1) * den)
    wps, dwps, _ = ctx.weierstrass(pt.sigma_raw)
    cross = max(_rel(a, x0s[0]) for a in x0s)
    return MaierReport(tuple(x0s), y0, kappa, wps, dwps,
                       float(_rel(x0s[0], wps)), float(_rel(y0, dwps)),
                       float(abs(kappa + pt.zn) / max(1.0, abs(pt.zn))), float(cross))


def monodromy_exponents(pt):
    """(r, s) with r + s tau = sigma and r eta1 + s eta2 = sum zeta(a_i)."""
    ctx = pt.ctx
    sig, S = pt.sigma_raw, pt.zeta_sum
    s = (S - sig * ctx.eta1) / (ctx.eta2 - ctx.tau * ctx.eta1)
    r = sig - s * ctx.tau
    return r, s
