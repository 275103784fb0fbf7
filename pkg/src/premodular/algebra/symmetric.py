"""Elimination of the half-period values e1, e2, e3 and of y0**2."""

from functools import lru_cache

from ..errors import SymmetryError
from .polynomial import MultiPoly, VAR_INDEX

_E = ("e1", "e2", "e3")
_EIDX = tuple(VAR_INDEX[v] for v in _E)


def _split_e(p):
    """Group ``p`` by its (e1, e2, e3) exponent; values are e-free MultiPolys."""
    groups = {}
    for exps, c in p.terms.items():
        key = tuple(exps[i] for i in _EIDX)
        rest = list(exps)
        for i in _EIDX:
            rest[i] = 0
        groups.setdefault(key, {})[tuple(rest)] = c
    return {k: MultiPoly(v) for k, v in groups.items()}


@lru_cache(maxsize=None)
def _elementary_product(a, b, c):
    """Expansion of s1**a * s2**b * s3**c in e1, e2, e3 as {exps: int}."""
    e1, e2, e3 = (MultiPoly.var(v) for v in _E)
    s1 = e1 + e2 + e3
    s2 = e1 * e2 + e1 * e3 + e2 * e3
    s3 = e1 * e2 * e3
    prod = s1 ** a * s2 ** b * s3 ** c
    return {tuple(ex[i] for i in _EIDX): co for ex, co in prod.terms.items()}


@lru_cache(maxsize=None)
def _elementary_values(b, c):
    g2, g3 = MultiPoly.var("g2"), MultiPoly.var("g3")
    return (-g2 / 4) ** b * (g3 / 4) ** c


def symmetric_reduce(p):
    """Rewrite a polynomial symmetric in e1, e2, e3 through g2 and g3.

    Uses e1 + e2 + e3 = 0, e1 e2 + e1 e3 + e2 e3 = -g2/4, e1 e2 e3 = g3/4.
    """
    groups = _split_e(p)
    out = MultiPoly.zero()
    while groups:
        lead = max(groups)
        a, b, c = lead
        if not (a >= b >= c):
            raise SymmetryError(f"polynomial is not symmetric in e1, e2, e3 (term e^{lead})")
        coeff = groups[lead]
        for ex, k in _elementary_product(a - b, b - c, c).items():
            new = groups.get(ex, MultiPoly.zero()) - coeff * k
            if new:
                groups[ex] = new
            else:
                groups.pop(ex, None)
        if a == b:
            out = out + coeff * _elementary_values(b - c, c)
    return out


def reduce_y0(p):
    """Lower every power y0**k, k >= 2, using y0**2 = 4 x0**3 - g2 x0 - g3."""
    if p.degree("y0") < 2:
        return p
    x0, g2, g3 = MultiPoly.var("x0"), MultiPoly.var("g2"), MultiPoly.var("g3")
    cubic = 4 * x0 ** 3 - g2 * x0 - g3
    powers = [MultiPoly.one()]
    out = MultiPoly.zero()
    for k, coeff in enumerate(p.coefficients("y0")):
        if not coeff:
            continue
        j, r = divmod(k, 2)
        while len(powers) <= j:
            powers.append(powers[-1] * cubic)
        term = coeff * powers[j]
        if r:
            term = term * MultiPoly.var("y0")
        out = out + term
    return out


def substitute_e(p, e):
    """Instantiate the placeholder e1 of a species table entry at ``e`` (one of e1, e2, e3)."""
    if e == "e1":
        return p
    return p.subs({"e1": MultiPoly.var(e)})

