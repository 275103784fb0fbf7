"""Arithmetic functions and the zero-count formulas at level N for n = 4."""

from __future__ import annotations

import math
from dataclasses import dataclass, asdict
from fractions import Fraction

from ..errors import ArgumentError, ConsistencyError


def totient(N):
    if N < 1:
        raise ArgumentError("totient needs N >= 1")
    out, m, p = N, N, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out -= out // p
        p += 1
    if m > 1:
        out -= out // m
    return out


def psi(N):
    """#{0 <= k1, k2 < N : gcd(k1, k2, N) = 1} via N^2 prod (1 - p^-2)."""
    out, m, p = N * N, N, 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            out = out // (p * p) * (p * p - 1)
        p += 1
    if m > 1:
        out = out // (m * m) * (m * m - 1)
    return out


def psi_bruteforce(N):
    return sum(1 for a in range(N) for b in range(N) if math.gcd(a, b, N) == 1)


def arith_functions(N):
    """(phi(N), phi(N/2), Psi(N)); phi(N/2) is 0 for odd N."""
    if N < 3:
        raise ArgumentError("level N must be at least 3")
    return totient(N), (totient(N // 2) if N % 2 == 0 else 0), psi(N)


@dataclass(frozen=True)
class CountReport:
    n: int
    N: int
    phi: int
    phi_half: int
    psi: int
    weight: int
    nu_inf: int
    eps: int
    U: int
    L: int
    PL: int
    eps_free: Fraction      # the count without the elliptic-point correction
    flagged: bool           # eps_free is not an integer

    def as_dict(self):
        d = asdict(self)
        d["eps_free"] = str(self.eps_free)
        return d


def _upper(N):
    phi, phi_half, ps = arith_functions(N)
    nu = 3 * phi + 4 * phi_half
    eps = 1 if N == 3 else 0
    base = Fraction(1, 2) * (Fraction(10 * ps, 12) - nu)
    U = base + Fraction(2, 3) * eps
    if U.denominator != 1 or U < 0:
        raise ConsistencyError(f"L_4({N}) = {U} is not a nonnegative integer")
    return phi, phi_half, ps, nu, eps, int(U), base


def counting(n, N):
    """CountReport for n = 4 at level N >= 3."""
    if n != 4:
        raise ArgumentError("counting is implemented for n = 4")
    phi, phi_half, ps, nu, eps, U, base = _upper(N)
    L = U
    if N % 2:
        PL = L + _upper(2 * N)[5]
    else:
        PL = _upper(2 * N)[5]
    return CountReport(n, N, phi, phi_half, ps, 10 * ps, nu, eps, U, L, PL, base,
                       base.denominator != 1)


def primitive_count_closed(N):
    """(5/3)(Psi(N) - 3 phi(N)) + (2/3) eps, an independent closed form of PL_4(N)."""
    phi, _, ps = arith_functions(N)
    eps = 1 if N == 3 else 0
    return Fraction(5, 3) * (ps - 3 * phi) + Fraction(2, 3) * eps


def count_table(n, levels=range(3, 13)):
    return [counting(n, N) for N in levels]
