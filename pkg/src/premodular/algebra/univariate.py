"""Dense univariate view of a MultiPoly."""

from __future__ import annotations

from ..errors import ArgumentError
from .polynomial import VAR_INDEX, MultiPoly


class UniPolyView:
    """Polynomial in one variable whose coefficients are MultiPolys.

    ``var`` is either a name from the fixed alphabet (the view can then be
    reassembled into a MultiPoly) or an auxiliary name such as ``"x"`` that
    only lives inside this view.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs, var="x"):
        coeffs = [c if isinstance(c, MultiPoly) else MultiPoly.constant(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        if var in VAR_INDEX:
            for c in coeffs:
                if c.degree(var) > 0:
                    raise ArgumentError(f"coefficient still contains {var}")
        self.var = var
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_multipoly(cls, p, var):
        if var not in VAR_INDEX:
            raise ArgumentError(f"{var!r} is not in the variable alphabet")
        return cls(p.coefficients(var), var)

    @classmethod
    def monomial(cls, power, var="x", coeff=1):
        return cls([0] * power + [coeff], var)

    def degree(self):
        return len(self.coeffs) - 1

    def leading_coefficient(self):
        if not self.coeffs:
            raise ArgumentError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return MultiPoly.zero()

    def is_zero(self):
        return not self.coeffs

    def to_multipoly(self):
        if self.var not in VAR_INDEX:
            raise ArgumentError(f"auxiliary variable {self.var!r} cannot be reassembled")
        out = MultiPoly.zero()
        for i, c in enumerate(self.coeffs):
            if c:
                out = out + c * MultiPoly.var(self.var, i)
        return out

    def _check(self, other):
        if other.var != self.var:
            raise ArgumentError(f"variable mismatch: {self.var} vs {other.var}")

    def __add__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPolyView([self[i] + other[i] for i in range(n)], self.var)

    def __sub__(self, other):
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPolyView([self[i] - other[i] for i in range(n)], self.var)

    def __neg__(self):
        return UniPolyView([-c for c in self.coeffs], self.var)

    def __mul__(self, other):
        if not isinstance(other, UniPolyView):
            if not isinstance(other, MultiPoly):
                other = MultiPoly.constant(other)
            return UniPolyView([c * other for c in self.coeffs], self.var)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPolyView([], self.var)
        out = [MultiPoly.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return UniPolyView(out, self.var)

    __rmul__ = __mul__

    def derivative(self, order=1):
        coeffs = list(self.coeffs)
        for _ in range(order):
            coeffs = [coeffs[i] * i for i in range(1, len(coeffs))]
        return UniPolyView(coeffs, self.var)

    def map(self, fn):
        return UniPolyView([fn(c) for c in self.coeffs], self.var)

    def __eq__(self, other):
        return (
            isinstance(other, UniPolyView)
            and self.var == other.var
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def __repr__(self):
        parts = [f"({c})*{self.var}^{i}" for i, c in enumerate(self.coeffs) if c]
        return "UniPolyView(" + (" + ".join(parts) or "0") + ")"
