"""Sylvester resultants via fraction-free Bareiss elimination."""

from __future__ import annotations

from ..errors import ArgumentError
from .polynomial import MultiPoly
from .univariate import UniPolyView


def sylvester_matrix(p, q):
    """Sylvester matrix of two UniPolyViews (highest powers first)."""
    m, k = p.degree(), q.degree()
    size = m + k
    zero = MultiPoly.zero()
    rows = []
    pc = list(reversed(p.coeffs))
    qc = list(reversed(q.coeffs))
    for i in range(k):
        rows.append([zero] * i + pc + [zero] * (size - m - 1 - i))
    for i in range(m):
        rows.append([zero] * i + qc + [zero] * (size - k - 1 - i))
    return rows


def bareiss_determinant(matrix):
    """Determinant of a square matrix of MultiPolys; every division is exact."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return MultiPoly.one()
    if any(len(row) != n for row in a):
        raise ArgumentError("matrix is not square")
    sign = 1
    prev = MultiPoly.one()
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if a[i][k]]
        if not candidates:
            return MultiPoly.zero()
        piv = min(candidates, key=lambda i: (len(a[i][k]), i))
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                num = akk * row_i[j]
                if aik and row_k[j]:
                    num = num - aik * row_k[j]
                row_i[j] = num.exact_div(prev) if not prev.is_constant() else num / prev.constant_term()
            row_i[k] = MultiPoly.zero()
        prev = akk
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def _as_view(p, var):
    if isinstance(p, UniPolyView):
        if var is not None and p.var != var:
            raise ArgumentError(f"view is in {p.var}, resultant requested in {var}")
        return p
    if var is None:
        raise ArgumentError("a variable is required when passing MultiPolys")
    return UniPolyView.from_multipoly(p, var)


def resultant(p, q, var=None):
    """Res_var(p, q) as the determinant of the Sylvester matrix.

    ``p`` and ``q`` may be UniPolyViews or MultiPolys (then ``var`` names the
    eliminated variable).  Both need positive degree in ``var``.
    """
    p = _as_view(p, var)
    q = _as_view(q, var if var is not None else p.var)
    if p.var != q.var:
        raise ArgumentError("operands are viewed in different variables")
    if p.degree() < 1 or q.degree() < 1:
        raise ArgumentError(f"resultant needs positive degree in {p.var}")
    return bareiss_determinant(sylvester_matrix(p, q))
