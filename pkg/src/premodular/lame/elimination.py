"""Elimination of B from the addition-map equations.

For x0 = wp(sigma), y0 = wp'(sigma) and z the Hecke-type value on the curve,
two polynomials f(B), g(B) vanish simultaneously; Res_B(f, g) = lambda_n W_n(z)
with lambda_n free of z.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.polynomial import MultiPoly
from ..algebra.resultant import resultant
from ..algebra.symmetric import reduce_y0, symmetric_reduce
from ..algebra.univariate import UniPolyView
from ..errors import ArgumentError, EliminationError, SymmetryError, UnsupportedError
from .spectral import consistency_polys
from .tables import MAX_TABLE_N, load_tables

B, g2, g3, x0, y0, z = (MultiPoly.var(v) for v in ("B", "g2", "g3", "x0", "y0", "z"))
DELTA = g2 ** 3 - 27 * g3 ** 2
Q = Fraction

# W_n as printed, monic in z (y0 powers not yet reduced)
PRINTED_W = {
    1: z,
    2: z ** 3 - 3 * x0 * z - y0,
    3: (z ** 6 - 15 * x0 * z ** 4 - 20 * y0 * z ** 3 + (Q(27, 4) * g2 - 45 * x0 ** 2) * z ** 2
        - 12 * x0 * y0 * z - Q(5, 4) * y0 ** 2),
    4: (z ** 10 - 45 * x0 * z ** 8 - 120 * y0 * z ** 7 + (Q(399, 4) * g2 - 630 * x0 ** 2) * z ** 6
        - 504 * x0 * y0 * z ** 5 - Q(15, 4) * (280 * x0 ** 3 - 49 * g2 * x0 - 115 * g3) * z ** 4
        + 15 * (11 * g2 - 24 * x0 ** 2) * y0 * z ** 3
        - Q(9, 4) * (140 * x0 ** 4 - 245 * g2 * x0 ** 2 + 190 * g3 * x0 + 21 * g2 ** 2) * z ** 2
        - (40 * x0 ** 3 - 163 * g2 * x0 + 125 * g3) * y0 * z
        + Q(3, 4) * (25 * g2 - 3 * x0 ** 2) * y0 ** 2),
}

# printed scale factors of Res_B(f, g) = lambda_n W_n
PRINTED_LAMBDA = {
    2: -(3 ** 9) * DELTA * y0 ** 2,
    3: 2 ** 36 * 3 ** 27 * 5 ** 30 * DELTA ** 5 * y0 ** 4,
    4: -(2 ** 80 * 3 ** 63 * 5 ** 60 * 7 ** 63) * DELTA ** 18 * y0 ** 8,
}

# f, g as printed are FG_SCALE[n] times build_fg(n); lambda scales by FG_SCALE^(deg_B f + deg_B g)
FG_SCALE = {2: 1, 3: 16, 4: 16}

# printed n = 3 pair
PRINTED_FG_3 = (
    (16 * B ** 6 - 576 * B ** 5 * x0 + 360 * B ** 4 * g2 + 5400 * B ** 3 * (5 * g3 + 4 * g2 * x0)
     - 3375 * B ** 2 * g2 ** 2 - 84375 * DELTA - 101250 * B * g2 * (3 * g3 + 2 * g2 * x0)),
    (16 * B ** 6 * z - 1440 * B ** 5 * y0 - 1800 * B ** 4 * g2 * z + 54000 * B ** 3 * (g2 * y0 - g3 * z)
     - 16875 * B ** 2 * g2 ** 2 * z - 506250 * B * g2 ** 2 * y0 + 421875 * DELTA * z),
)


def _check_n(n):
    if not isinstance(n, int) or n < 1:
        raise ArgumentError("n must be a positive integer")
    if n > MAX_TABLE_N:
        raise UnsupportedError(f"elimination needs twisted tables, available for n <= {MAX_TABLE_N}")


def build_fg(n):
    """The pair (f, g) in Q[B, g2, g3, x0, y0, z] whose common B-roots give the curve."""
    _check_n(n)
    t = load_tables(n)
    k = n * n * (n + 1) ** 2
    base = t.l0 * t.lt0 * t.lt0
    f = sum((t.l(i) * t.lt(i) * t.lt(i) for i in (1, 2, 3)), MultiPoly.zero()) / 3
    f = f - x0 * base * Fraction(k, 4)
    g = z * t.lt(1) * t.lt(2) * t.lt(3)
    g = g - y0 * base * t.l_theta * Fraction(k * (n - 1) * (n + 2), 16)
    f, g = symmetric_reduce(f), symmetric_reduce(g)
    for p in (f, g):
        if any(p.degree(e) for e in ("e1", "e2", "e3")):
            raise SymmetryError("half-period values survive the symmetric reduction")
    return f, g


def printed_w(n, reduced=True):
    if n not in PRINTED_W:
        raise UnsupportedError(f"no printed W_n for n = {n}")
    return reduce_y0(PRINTED_W[n]) if reduced else PRINTED_W[n]


def _divide_on_curve(p, lam):
    """p / lam where p has y0-degree <= 1 and lam is y0-free."""
    parts = p.coefficients("y0")
    out = MultiPoly.zero()
    for k, part in enumerate(parts):
        if part:
            out = out + part.exact_div(lam) * y0 ** k
    return out


def expected_lambda(n):
    """Printed lambda_n rescaled to the normalization of build_fg, y0-reduced."""
    if n not in PRINTED_LAMBDA:
        raise UnsupportedError(f"no printed lambda_n for n = {n}")
    f, g = build_fg(n)
    rows = f.degree("B") + g.degree("B")
    return reduce_y0(PRINTED_LAMBDA[n]) / Fraction(FG_SCALE[n]) ** rows


def _split_resultant(res, n):
    """Write res = lam * W on the curve, W monic in z, lam the leading z-coefficient.

    Res is only proportional to W modulo y0^2 = 4x0^3 - g2 x0 - g3, so both are
    y0-reduced first; lam is then y0-free.
    """
    res = reduce_y0(res)
    view = UniPolyView.from_multipoly(res, "z")
    expected = n * (n + 1) // 2
    if view.degree() != expected:
        raise EliminationError(f"resultant has z-degree {view.degree()}, expected {expected}")
    lam = view.leading_coefficient()
    if lam.degree("y0") > 0:
        raise EliminationError("leading coefficient depends on y0 after reduction")
    try:
        w = _divide_on_curve(res, lam)
    except ArithmeticError as exc:
        raise EliminationError("resultant is not lambda times a polynomial monic in z") from exc
    return lam, w


@dataclass(frozen=True)
class EliminationResult:
    n: int
    W: MultiPoly            # monic in z, y0-reduced
    lam: MultiPoly | None   # full mode only; y0-reduced
    specializations: tuple  # specialized mode: (g2, g3, x0, y0) tuples checked


def _resultant_B(f, g):
    return resultant(f, g, "B")


def compute_Wn(n, mode="full", samples=25, seed=0):
    """Eliminate B from (f, g).

    ``full`` computes the symbolic resultant (n <= 3 is practical) and returns
    W_n with its scale lam.  ``specialized`` specializes (g2, g3, x0, y0) to
    random rational points of the curve, computes the univariate-in-B resultant
    with z symbolic, and checks it against a multiple of the printed W_n.
    """
    _check_n(n)
    if n == 1:
        # g = z has no B: the curve is E itself and sigma_1 is the identity
        return EliminationResult(1, z, None, ())
    f, g = build_fg(n)
    if mode == "full":
        lam, w = _split_resultant(_resultant_B(f, g), n)
        return EliminationResult(n, w, lam, ())
    if mode != "specialized":
        raise ArgumentError(f"unknown mode {mode!r}")
    target = printed_w(n)
    lam_target = expected_lambda(n)
    rng = random.Random(seed)
    checked = []
    for point in curve_points(rng, samples):
        vals = dict(zip(("g2", "g3", "x0", "y0"), point))
        res = _resultant_B(f.subs(vals), g.subs(vals))
        if res != (lam_target * target).subs(vals):
            raise EliminationError(f"specialized resultant is not lambda_{n} W_{n} at {point}")
        checked.append(point)
    return EliminationResult(n, target, None, tuple(checked))


def curve_points(rng, count):
    """Random rational (g2, g3, x0, y0) on y0^2 = 4x0^3 - g2 x0 - g3, Delta != 0, y0 != 0."""
    out = []
    while len(out) < count:
        xv, yv, g2v = (Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(3))
        if yv == 0:
            continue
        g3v = 4 * xv ** 3 - g2v * xv - yv * yv
        if g2v ** 3 - 27 * g3v ** 2 == 0:
            continue
        out.append((g2v, g3v, xv, yv))
    return out


def consistency_resultant(n, g2v=None, g3v=None):
    """Res_beta(G1, G0), optionally at rational (g2, g3); a polynomial in alpha (and g2, g3)."""
    pair = consistency_polys(n)
    G1, G0 = pair.G1, pair.G0
    if g2v is not None or g3v is not None:
        if g2v is None or g3v is None:
            raise ArgumentError("specialize both g2 and g3 or neither")
        vals = {"g2": Fraction(g2v), "g3": Fraction(g3v)}
        G1, G0 = G1.subs(vals), G0.subs(vals)
    return resultant(G1, G0, "beta")


def bezout_count(n, g2v, g3v):
    """Number of solutions (alpha, beta) of G1 = G0 = 0 with multiplicity at rational (g2, g3)."""
    if Fraction(g2v) ** 3 - 27 * Fraction(g3v) ** 2 == 0:
        raise ArgumentError("the curve is singular (Delta = 0)")
    res = consistency_resultant(n, g2v, g3v)
    if not res:
        raise EliminationError("G1 and G0 share a factor at this specialization")
    return res.degree("alpha")
