"""Numerical evaluation of Z_n(sigma; tau) = W_n(Z)(sigma; tau)."""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache

from ..errors import ArgumentError
from ..elliptic.torus import TorusContext
from ..lame.elimination import compute_Wn, printed_w


@lru_cache(maxsize=None)
def exact_W(n):
    """W_n monic in z with y0-degree <= 1.

    n <= 3 comes from the symbolic resultant; n = 4 is the printed polynomial,
    which ``compute_Wn(4, "specialized")`` certifies against the resultant.
    """
    if not 1 <= n <= 4:
        raise ArgumentError("W_n is available for 1 <= n <= 4")
    if n == 4:
        return printed_w(4)
    return compute_Wn(n, "full").W


def _rational(ctx):
    if ctx.dps is None:
        return lambda q: q.numerator / q.denominator
    mp = ctx.ops.ctx
    return lambda q: mp.mpf(q.numerator) / q.denominator


def _values(ctx, r, s):
    sigma = ctx.from_rs(r, s)
    wp, dwp, _ = ctx.weierstrass(sigma)
    return {"z": ctx.hecke_Z(r, s), "x0": wp, "y0": dwp, "g2": ctx.g2, "g3": ctx.g3}


def eval_Zn(n, r, s, tau=None, ctx=None):
    """Z_n at sigma = r + s tau; pass ``ctx`` to reuse a TorusContext."""
    if ctx is None:
        if tau is None:
            raise ArgumentError("either tau or a TorusContext is required")
        ctx = TorusContext(tau)
    return exact_W(n).evaluate(_values(ctx, r, s), _rational(ctx))


class _HornerForm:
    """W_n rebuilt from its serialized form as coefficients of z, evaluated by Horner."""

    def __init__(self, text):
        data = json.loads(text)
        names = data["variables"]
        zi = names.index("z")
        by_power = {}
        for term in data["terms"]:
            exps = term["exponents"]
            num, _, den = term["coeff"].partition("/")
            coeff = Fraction(int(num), int(den or 1))
            mono = tuple((names[i], e) for i, e in enumerate(exps) if e and i != zi)
            by_power.setdefault(exps[zi], []).append((coeff, mono))
        self.degree = max(by_power)
        self.coeffs = [by_power.get(k, []) for k in range(self.degree + 1)]

    def __call__(self, vals, rational):
        acc = 0
        for terms in reversed(self.coeffs):
            c = 0
            for coeff, mono in terms:
                t = rational(coeff)
                for name, e in mono:
                    t = t * vals[name] ** e
                c = c + t
            acc = acc * vals["z"] + c
        return acc


class PremodularEvaluator:
    """Z_n evaluated by direct substitution and, independently, by Horner in z."""

    def __init__(self, n, context_factory=TorusContext):
        self.n = n
        self.W = exact_W(n)
        self._horner = _HornerForm(self.W.to_json())
        self._factory = context_factory
        self._contexts = {}
        self._cache = {}

    def context(self, tau, M=None):
        key = (complex(tau), M)
        if key not in self._contexts:
            self._contexts[key] = self._factory(tau, M=M)
        return self._contexts[key]

    def _key(self, r, s, tau, M):
        return (complex(r), complex(s), complex(tau), M)

    def __call__(self, r, s, tau, M=None):
        key = self._key(r, s, tau, M)
        if key not in self._cache:
            ctx = self.context(tau, M)
            self._cache[key] = self.W.evaluate(_values(ctx, r, s), _rational(ctx))
        return self._cache[key]

    def horner(self, r, s, tau, M=None):
        ctx = self.context(tau, M)
        return self._horner(_values(ctx, r, s), _rational(ctx))

    def scale(self, r, s, tau, M=None):
        """Magnitude scale m^k, k = n(n+1)/2, with m the largest weight-normalized input."""
        ctx = self.context(tau, M)
        return magnitude_scale(self.n, _values(ctx, r, s))


def magnitude_scale(n, vals):
    m = max(abs(vals["z"]), abs(vals["x0"]) ** 0.5, abs(vals["y0"]) ** (1 / 3),
            abs(vals["g2"]) ** 0.25, abs(vals["g3"]) ** (1 / 6))
    return float(m) ** (n * (n + 1) // 2)


def specialized_W(n, x0, y0, g2, g3):
    """Complex coefficients of W_n(z) at numeric (x0, y0, g2, g3), highest power first."""
    W = exact_W(n)
    vals = {"x0": x0, "y0": y0, "g2": g2, "g3": g3}
    coeffs = [c.evaluate(vals) if c else 0j for c in W.coefficients("z")]
    return list(reversed(coeffs))

