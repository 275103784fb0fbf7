"""Leading q-term of W_4(Z_{t,s}) along tau = iT, T -> infinity."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from ..errors import ArgumentError, ConvergenceError
from ..elliptic.torus import TorusContext
from .evaluator import eval_Zn

DPS = 120
_HEIGHTS = (8, 10)
# generic s: the first correction is q^delta, delta = min(s, 1 - s); this keeps it below e^-25
_DECAY = 25.0


@dataclass(frozen=True)
class CuspFit:
    order: int
    coefficient: complex
    heights: tuple
    order_estimate: float   # unrounded log-ratio
    spread: float           # relative disagreement of the coefficient between heights


def s_class(s):
    """'0', 'half' or 'generic' for s modulo 1."""
    s = Fraction(s) % 1 if isinstance(s, (int, Fraction)) else s % 1.0
    if s == 0:
        return "0"
    if s == Fraction(1, 2):
        return "half"
    return "generic"


def _parse_s(s):
    if s in ("0", 0):
        return Fraction(0)
    if s in ("half", "1/2"):
        return Fraction(1, 2)
    if isinstance(s, str):
        return Fraction(s)
    return s


def _heights(s):
    cls = s_class(s)
    if cls != "generic":
        return _HEIGHTS
    x = float(s) % 1.0
    delta = min(x, 1 - x)
    lo = max(_HEIGHTS[0], math.ceil(_DECAY / (2 * math.pi * delta)))
    return (lo, lo + 2)


def cusp_expansion(n, s, t, dps=DPS):
    """Fit (q-order, leading coefficient) of W_n(Z_{t,s})(iT) from two heights.

    ``s`` is '0', 'half', or a number/Fraction; ``t`` must avoid half-integers.
    """
    if n != 4:
        raise ArgumentError("cusp expansions are implemented for n = 4")
    s = _parse_s(s)
    T1, T2 = _heights(s)
    vals, qs = [], []
    for T in (T1, T2):
        ctx = TorusContext(1j * T, dps=dps)
        mp = ctx.ops.ctx
        r = mp.mpf(Fraction(t).numerator) / Fraction(t).denominator if isinstance(t, (int, Fraction)) else mp.mpf(t)
        sv = mp.mpf(s.numerator) / s.denominator if isinstance(s, Fraction) else mp.mpf(s)
        vals.append(eval_Zn(n, r, sv, ctx=ctx))
        qs.append(ctx.q)
    mp = ctx.ops.ctx
    if vals[0] == 0 or vals[1] == 0:
        raise ConvergenceError("W_n vanishes identically along the test line")
    est = float(mp.log(abs(vals[1] / vals[0])) / mp.log(abs(qs[1] / qs[0])))
    k = round(est)
    if abs(est - k) > 1e-3:
        raise ConvergenceError(f"q-order estimate {est} is not close to an integer")
    coeffs = [v / q ** k for v, q in zip(vals, qs)]
    spread = float(abs(coeffs[0] - coeffs[1]) / abs(coeffs[1]))
    if spread > 1e-8:
        raise ConvergenceError(f"leading coefficient unstable between heights (spread {spread:.3g})")
    return CuspFit(k, complex((coeffs[0] + coeffs[1]) / 2), (T1, T2), est, spread)


def closed_form_leading(s, t):
    """Closed-form (order, coefficient) of the leading q-term of W_4(Z_{t,s})."""
    s = _parse_s(s)
    cls = s_class(s)
    pi = math.pi
    trig = math.cos(pi * float(t)) ** 2 * math.sin(pi * float(t)) ** 2
    if cls == "0":
        return 3, 2 ** 14 * 3 ** 3 * 5 ** 2 * 7 * pi ** 10 * trig
    if cls == "half":
        return 2, 2 ** 10 * 3 ** 3 * 5 ** 2 * 7 * pi ** 10 * trig
    x = float(s) % 1.0
    poly = (-2 + x) * (-1 + x) ** 2 * x ** 2 * (1 + x) * (-3 + 2 * x) * (-1 + 2 * x) ** 2 * (1 + 2 * x)
    return 0, -64 * pi ** 10 * poly


def cusp_classes(N):
    """Pairs (k1, k2), 0 <= k < N, with gcd(k1, k2, N) = 1."""
    return [(k1, k2) for k1 in range(N) for k2 in range(N) if math.gcd(k1, k2, N) == 1]


def nu_infinity_numeric(n, N):
    """Sum of fitted q-orders of W_n(Z_{k1/N, k2/N}) over the classes of level N."""
    if n != 4:
        raise ArgumentError("cusp orders are implemented for n = 4")
    if not 3 <= N <= 8:
        raise ArgumentError("numeric cusp totals are supported for 3 <= N <= 8")
    return sum(cusp_expansion(n, Fraction(k2, N), Fraction(k1, N)).order for k1, k2 in cusp_classes(N))
