"""Polynomial solutions of the tensor-product Lamé operator in x = wp(z).

The fourth-order operator acting on a polynomial q(x) is

    p^2 q'''' + 3 p p' q''' + (3/4 p'^2 - 2 (2 (n^2+n-12) x + beta) p) q''
      - ((2 (n^2+n-3) x + beta) p' + 6 (n^2+n-2) p) q'
      + (alpha^2 - n (n+1) p') q

with p = 4x^3 - g2 x - g3, alpha = B_a - B_b and beta = B_a + B_b.  Monic
q of degree n with L4 q of degree <= 1 determines s_1..s_n uniquely; the
two leftover coefficients are the consistency polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..algebra.polynomial import MultiPoly
from ..algebra.univariate import UniPolyView
from ..errors import ArgumentError, DivisionError, InternalError

ALPHA = MultiPoly.var("alpha")
BETA = MultiPoly.var("beta")
G2 = MultiPoly.var("g2")
G3 = MultiPoly.var("g3")
B = MultiPoly.var("B")


@dataclass(frozen=True)
class SpectralCoeffs:
    n: int
    s: tuple  # s_1 .. s_n as MultiPolys in alpha, beta, g2, g3

    def __getitem__(self, k):
        """s_k with the conventions s_0 = 1 and s_k = 0 for k < 0."""
        if k == 0:
            return MultiPoly.one()
        if k < 0:
            return MultiPoly.zero()
        return self.s[k - 1]

    def q(self):
        """x^n - s_1 x^(n-1) + ... + (-1)^n s_n."""
        coeffs = [MultiPoly.zero()] * (self.n + 1)
        for j in range(self.n + 1):
            coeffs[self.n - j] = self[j] * (-1) ** j
        return UniPolyView(coeffs, "x")


@dataclass(frozen=True)
class ConsistencyPair:
    n: int
    G1: MultiPoly
    G0: MultiPoly
    F1: MultiPoly
    F0: MultiPoly


def _cubic():
    return UniPolyView([-G3, -G2, 0, 4], "x")


def apply_tensor_ode(q, n, alpha=ALPHA, beta=BETA):
    """Apply the tensor-product operator L4 to ``q`` (a UniPolyView in x)."""
    if q.var != "x":
        raise ArgumentError("the operator acts on polynomials in the auxiliary variable x")
    if not isinstance(alpha, MultiPoly):
        alpha = MultiPoly.constant(alpha)
    if not isinstance(beta, MultiPoly):
        beta = MultiPoly.constant(beta)
    N = n * n + n
    p = _cubic()
    dp = p.derivative()
    x = UniPolyView([0, 1], "x")
    const = lambda c: UniPolyView([c], "x")  # noqa: E731

    d1, d2, d3, d4 = (q.derivative(k) for k in (1, 2, 3, 4))
    out = p * p * d4
    out = out + p * dp * d3 * 3
    c2 = dp * dp * Fraction(3, 4) - (x * (2 * (N - 12)) + const(beta)) * p * 2
    out = out + c2 * d2
    c1 = (x * (2 * (N - 3)) + const(beta)) * dp + p * (6 * (N - 2))
    out = out - c1 * d1
    c0 = const(alpha * alpha) - dp * N
    return out + c0 * q


@lru_cache(maxsize=None)
def _operator_on_monomials(n):
    return tuple(apply_tensor_ode(UniPolyView.monomial(m), n) for m in range(n + 1))


def top_coefficient(m, n):
    """Coefficient of x^(m+2) in L4 x^m; for m >= 0 it vanishes exactly when m = n."""
    return 4 * (m - n) * (2 * m + 1) * (2 * m + 3) * (m + n + 1)


@lru_cache(maxsize=None)
def solve_spectral_coeffs(n):
    """Solve for s_1..s_n from the vanishing of the x^(n+1) .. x^2 coefficients."""
    if n < 1:
        raise ArgumentError("n must be a positive integer")
    images = _operator_on_monomials(n)
    s = [MultiPoly.one()]  # s_0
    for i in range(1, n + 1):
        power = n + 2 - i
        known = MultiPoly.zero()
        for j in range(i):
            known = known + images[n - j][power] * s[j] * (-1) ** j
        lead = images[n - i][power]
        if not lead.is_constant() or not lead:
            raise InternalError(f"triangular system degenerates at s_{i}")
        s.append(-known / (lead.constant_term() * (-1) ** i))
    return SpectralCoeffs(n, tuple(s[1:]))


def _operator_image(n):
    sc = solve_spectral_coeffs(n)
    images = _operator_on_monomials(n)
    coeffs = []
    for power in range(2):
        acc = MultiPoly.zero()
        for j in range(n + 1):
            acc = acc + images[n - j][power] * sc[j] * (-1) ** j
        coeffs.append(acc)
    return coeffs


@lru_cache(maxsize=None)
def consistency_polys(n):
    """The x^1 and x^0 coefficients F1, F0 of L4 q and their quotients by alpha^2."""
    if n < 2:
        raise ArgumentError("consistency polynomials need n >= 2")
    F0, F1 = _operator_image(n)
    a2 = ALPHA * ALPHA
    try:
        G1 = F1.exact_div(a2)
        G0 = F0.exact_div(a2)
    except DivisionError as exc:
        raise InternalError("consistency polynomial is not divisible by alpha^2") from exc
    return ConsistencyPair(n, G1, G0, F1, F0)


@lru_cache(maxsize=None)
def assemble_ell(n):
    """Spectral polynomial ell_n(B) = 4B s_n^2 + 4 g3 s_{n-2} s_n - g2 s_{n-1} s_n - g3 s_{n-1}^2."""
    sc = solve_spectral_coeffs(n)
    on_curve = {"alpha": 0, "beta": 2 * B}
    s = {k: sc[k].subs(on_curve) for k in (n - 2, n - 1, n)}
    return (4 * B * s[n] * s[n] + 4 * G3 * s[n - 2] * s[n]
            - G2 * s[n - 1] * s[n] - G3 * s[n - 1] * s[n - 1])
