"""Weierstrass and Hecke functions on C / (Z + Z tau) from q-series.

Points are written z = r + s tau.  The cot-series below converge for
|s| < 1; every evaluation first shifts z by lattice vectors so that
s lies in [-1/2, 1/2) and then applies (quasi-)periodicity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import cached_property

import mpmath

from ..errors import ArgumentError, DomainError, PoleError

_HALF_PERIODS = ((1, 0), (0, 1), (1, 1))  # omega_1 = 1, omega_2 = tau, omega_3 = 1 + tau


class _FloatOps:
    pi = math.pi
    exp = staticmethod(cmath.exp)
    sin = staticmethod(cmath.sin)
    cos = staticmethod(cmath.cos)

    @staticmethod
    def num(x):
        return complex(x)

    @staticmethod
    def floor(x):
        return math.floor(x)


class _MpOps:
    def __init__(self, dps):
        self.ctx = mpmath.MPContext()
        self.ctx.dps = dps
        self.pi = self.ctx.pi
        self.exp, self.sin, self.cos = self.ctx.exp, self.ctx.sin, self.ctx.cos

    def num(self, x):
        if isinstance(x, complex):
            return self.ctx.mpc(x.real, x.imag)
        return self.ctx.mpmathify(x)

    def floor(self, x):
        return int(self.ctx.floor(x))


@dataclass(frozen=True)
class TorusPoint:
    z: complex
    r: float
    s: float  # normalized into [0, 1)


def _sigma(k, p):
    return sum(d ** p for d in range(1, k + 1) if k % d == 0)


class TorusContext:
    """Lattice Z + Z tau with cached invariants.

    ``M`` is the number of q-series terms (chosen from the requested accuracy
    when omitted); ``dps`` switches to mpmath arithmetic at that many digits.
    """

    def __init__(self, tau, M=None, dps=None):
        self.ops = _FloatOps() if dps is None else _MpOps(dps)
        self.dps = dps
        tau = self.ops.num(tau)
        if not tau.imag > 0:
            raise DomainError("tau must lie in the upper half plane")
        self.tau = tau
        self._I = 1j if dps is None else self.ops.ctx.mpc(0, 1)
        self.q = self.ops.exp(2 * self._I * self.ops.pi * tau)
        if M is None:
            eps = 1e-19 if dps is None else 10.0 ** (-dps - 5)
            # worst-case term ratio after reducing s into [-1/2, 1/2)
            rate = math.pi * float(tau.imag)
            M = max(4, int(math.ceil(-math.log(eps) / rate)) + 2)
        if M < 1:
            raise ArgumentError("truncation order must be >= 1")
        self.M = M
        qn = [self.q ** k for k in range(1, M + 1)]
        self._lam = [x / (1 - x) for x in qn]  # sum_m q^{km}

    # -- constants -------------------------------------------------------

    @cached_property
    def eisenstein(self):
        """(g2, g3, Delta)."""
        pi, q = self.ops.pi, self.q
        s3 = sum(_sigma(k, 3) * q ** k for k in range(1, self.M + 1))
        s5 = sum(_sigma(k, 5) * q ** k for k in range(1, self.M + 1))
        g2 = pi ** 4 * 4 / 3 * (1 + 240 * s3)
        g3 = pi ** 6 * 8 / 27 * (1 - 504 * s5)
        return g2, g3, g2 ** 3 - 27 * g3 ** 2

    @property
    def g2(self):
        return self.eisenstein[0]

    @property
    def g3(self):
        return self.eisenstein[1]

    @property
    def delta(self):
        return self.eisenstein[2]

    @cached_property
    def quasi_periods(self):
        pi = self.ops.pi
        eta1 = pi ** 2 / 3 - 8 * pi ** 2 * sum(k * lam for k, lam in enumerate(self._lam, 1))
        eta2 = eta1 * self.tau - 2 * pi * self._I
        return eta1, eta2

    @property
    def eta1(self):
        return self.quasi_periods[0]

    @property
    def eta2(self):
        return self.quasi_periods[1]

    @cached_property
    def e(self):
        """(e1, e2, e3) = wp at 1/2, tau/2, (1+tau)/2."""
        return tuple(self.wp(self.from_rs(a / 2, b / 2)) for a, b in _HALF_PERIODS)

    def legendre_residual(self):
        return abs(self.eta1 * self.tau - self.eta2 - 2 * self.ops.pi * self._I)

    # -- coordinates -----------------------------------------------------

    def from_rs(self, r, s):
        return self.ops.num(r) + self.ops.num(s) * self.tau

    def rs(self, z):
        """Real (r, s) with z = r + s tau."""
        z = self.ops.num(z)
        s = z.imag / self.tau.imag
        return z.real - s * self.tau.real, s

    def point(self, z):
        r, s = self.rs(z)
        m, k = self.ops.floor(r), self.ops.floor(s)
        r, s = r - m, s - k
        return TorusPoint(self.from_rs(r, s), r, s)

    def _shift(self, z):
        """Split z = w + m + k tau with w having r in [-1/2, 1/2), s in [-1/2, 1/2)."""
        z = self.ops.num(z)
        r, s = self.rs(z)
        k = self.ops.floor(s + 0.5)
        m = self.ops.floor(r + 0.5)
        w = z - m - k * self.tau
        return w, m, k

    # -- series ----------------------------------------------------------

    def _series(self, w):
        """(wp, wp', Z0) at a reduced point w, Z0 = pi cot(pi w) + 4 pi sum sin(2 pi k w) lam_k."""
        ops = self.ops
        pi = ops.pi
        sn = ops.sin(pi * w)
        # within rounding distance of the lattice counts as a pole
        if abs(sn) < (1e-14 if self.dps is None else ops.ctx.mpf(10) ** (-ops.ctx.dps + 2)):
            raise PoleError("z lies on the lattice")
        cot = ops.cos(pi * w) / sn
        zsum = wsum = dsum = 0
        for k, lam in enumerate(self._lam, 1):
            a = 2 * pi * k * w
            sk, ck = ops.sin(a), ops.cos(a)
            zsum += sk * lam
            wsum += k * (1 - ck) * lam
            dsum += k * k * sk * lam
        wp = pi ** 2 * cot ** 2 + 2 * pi ** 2 / 3 + 8 * pi ** 2 * wsum
        dwp = -2 * pi ** 3 * cot * (1 + cot ** 2) + 16 * pi ** 3 * dsum
        z0 = pi * cot + 4 * pi * zsum
        return wp, dwp, z0

    def weierstrass(self, z):
        """(wp(z), wp'(z), zeta(z)) for any z off the lattice."""
        w, m, k = self._shift(z)
        wp, dwp, z0 = self._series(w)
        zeta = self.eta1 * w + z0 + m * self.eta1 + k * self.eta2
        return wp, dwp, zeta

    def wp(self, z):
        return self.weierstrass(z)[0]

    def wp_prime(self, z):
        return self.weierstrass(z)[1]

    def zeta(self, z):
        return self.weierstrass(z)[2]

    def hecke_Z(self, r, s):
        """Z_{r,s} = zeta(r + s tau) - r eta1 - s eta2 (lattice periodic in (r, s))."""
        ops = self.ops
        r, s = ops.num(r), ops.num(s)
        k = ops.floor(s.real + 0.5)
        m = ops.floor(r.real + 0.5)
        r, s = r - m, s - k
        w = r + s * self.tau
        return self._series(w)[2] + 2 * ops.pi * self._I * s
