"""Species factorizations of the spectral polynomial and the twisted Lamé tables.

Species factors l_1..l_3 and lt_1..lt_3 are stored once, written in a single
placeholder half-period value ``e1``; ``instantiate`` moves them to e1, e2
or e3.  Products over the three species only become e-free after
``symmetric_reduce``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt

from ..algebra.polynomial import MultiPoly
from ..algebra.symmetric import substitute_e, symmetric_reduce
from ..errors import ArgumentError, UnsupportedError

B, g2, g3, e = (MultiPoly.var(v) for v in ("B", "g2", "g3", "e1"))
ONE = MultiPoly.one()
Q = Fraction

# n -> (printed c_n^2, l_0, species factor l_e)
_ELL_FACTORS = {
    1: (Q(4), ONE, B - e),
    2: (Q(4, 81), B ** 2 - 3 * g2, B + 3 * e),
    3: (Q(4, 3 ** 4 * 5 ** 4), B, B ** 2 - 6 * e * B + 15 * (3 * e ** 2 - g2)),
    4: (Q(1, 3 ** 8 * 5 ** 4 * 7 ** 4), B ** 3 - 52 * g2 * B + 560 * g3,
        B ** 2 + 10 * e * B - 7 * (5 * e ** 2 + g2)),
    5: (Q(1, 3 ** 12 * 5 ** 4 * 7 ** 4 * 11 ** 2), B ** 2 - 27 * g2,
        B ** 3 - 15 * e * B ** 2 + (315 * e ** 2 - 132 * g2) * B
        + e * (2835 * e ** 2 - 540 * g2)),
}

# n -> (lt_0, twisted species factor lt_e, l_theta)
_TWISTED = {
    1: (ONE, ONE, ONE),
    2: (ONE, B - 6 * e, ONE),
    3: (B ** 2 - Q(75, 4) * g2, B ** 2 - 15 * e * B + Q(75, 4) * g2 - 225 * e ** 2, ONE),
    4: (B ** 3 - Q(343, 4) * g2 * B - Q(1715, 2) * g3,
        B ** 4 - 55 * e * B ** 3 + (Q(539, 4) * g2 - 945 * e ** 2) * B ** 2
        + (1960 * e * g2 + 2450 * g3) * B + 61740 * e ** 2 * g2 - 68600 * e * g3
        - 9261 * g2 ** 2,
        B ** 2 - Q(196, 3) * g2),
}

# l_theta for n = 4 as tabulated; the elimination and the kappa map both require 196/3
PRINTED_L_THETA_4 = B ** 2 - Q(193, 3) * g2

# the expanded spectral polynomials printed for n <= 3
_ELL_EXPANDED = {
    1: 4 * B ** 3 - g2 * B - g3,
    2: (Q(4, 81) * B ** 5 - Q(7, 27) * g2 * B ** 3 + Q(1, 3) * g3 * B ** 2
        + Q(1, 3) * g2 ** 2 * B - g2 * g3),
    3: Q(1, 2 ** 2 * 3 ** 4 * 5 ** 4) * B * (
        16 * B ** 6 - 504 * g2 * B ** 4 + 2376 * g3 * B ** 3 + 4185 * g2 ** 2 * B ** 2
        - 36450 * g2 * g3 * B + 91125 * g3 ** 2 - 3375 * g2 ** 3),
}

SPECIES = ("e1", "e2", "e3")


def derived_c_sq(n):
    """c_n^2 = 4 / ((2n-1)!!)^4, the constant that makes c_n^2 l_0 l_1 l_2 l_3 = ell_n."""
    dfact = 1
    for k in range(1, 2 * n, 2):
        dfact *= k
    return Fraction(4, dfact ** 4)


MAX_TABLE_N = max(_TWISTED)
MAX_FACTORED_N = max(_ELL_FACTORS)


def instantiate(p, i):
    """Move a placeholder species polynomial to half-period index i in {1, 2, 3}."""
    if i not in (1, 2, 3):
        raise ArgumentError("species index must be 1, 2 or 3")
    return substitute_e(p, SPECIES[i - 1])


@dataclass(frozen=True)
class SpectralTables:
    n: int
    ell: MultiPoly        # c_n^2 l_0 l_1 l_2 l_3, symmetric-reduced
    l0: MultiPoly
    l_species: MultiPoly  # l_i written in the placeholder e1
    lt0: MultiPoly
    lt_species: MultiPoly
    l_theta: MultiPoly
    c_sq: Fraction          # consistent with ell
    printed_c_sq: Fraction  # leading constant as tabulated; differs for n >= 4

    def l(self, i):
        return self.l0 if i == 0 else instantiate(self.l_species, i)

    def lt(self, i):
        return self.lt0 if i == 0 else instantiate(self.lt_species, i)

    @property
    def c(self):
        """Positive square root of c_n^2; every tabulated c_n^2 is a rational square."""
        return _rational_sqrt(self.c_sq)


def _rational_sqrt(q):
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        raise ArgumentError(f"{q} is not a rational square")
    return Fraction(rn, rd)


def printed_c_sq(n):
    if n not in _ELL_FACTORS:
        raise UnsupportedError(f"no species factorization tabulated for n = {n}")
    return _ELL_FACTORS[n][0]


def factored_ell(n, c_sq=None):
    """Symmetric reduction of c_n^2 l_0 l_1 l_2 l_3 (1 <= n <= 5).

    ``c_sq`` defaults to the tabulated leading constant.
    """
    if n not in _ELL_FACTORS:
        raise UnsupportedError(f"no species factorization tabulated for n = {n}")
    printed, l0, le = _ELL_FACTORS[n]
    prod = l0 * instantiate(le, 1) * instantiate(le, 2) * instantiate(le, 3)
    return symmetric_reduce(prod * (printed if c_sq is None else Fraction(c_sq)))


def expanded_ell(n):
    """The fully expanded spectral polynomial where it is printed (n <= 3)."""
    if n not in _ELL_EXPANDED:
        raise UnsupportedError(f"no expanded spectral polynomial tabulated for n = {n}")
    return _ELL_EXPANDED[n]


@lru_cache(maxsize=None)
def load_tables(n):
    if n not in _TWISTED:
        raise UnsupportedError(f"twisted Lamé tables are only available for 1 <= n <= {MAX_TABLE_N}")
    printed, l0, le = _ELL_FACTORS[n]
    lt0, lte, lth = _TWISTED[n]
    c_sq = derived_c_sq(n)
    return SpectralTables(n=n, ell=factored_ell(n, c_sq), l0=l0, l_species=le, lt0=lt0,
                          lt_species=lte, l_theta=lth, c_sq=c_sq, printed_c_sq=printed)
