import cmath
import random

import numpy as np
import pytest

from premodular.elliptic.roots import poly_roots
from premodular.errors import ArgumentError


def _close_sets(got, want, tol):
    got = list(got)
    for w in want:
        i = min(range(len(got)), key=lambda k: abs(got[k] - w))
        assert abs(got[i] - w) < tol
        got.pop(i)


def test_x_squared_plus_one():
    _close_sets(poly_roots([1, 0, 1]), [1j, -1j], 1e-12)


def test_cubic_with_integer_roots():
    _close_sets(poly_roots([1, -6, 11, -6]), [1, 2, 3], 1e-10)


def test_linear_and_constant():
    assert poly_roots([2, -3]) == [1.5]
    assert poly_roots([5]) == []


def test_rejects_zero_leading_coefficient():
    with pytest.raises(ArgumentError):
        poly_roots([0, 1, 2])
    with pytest.raises(ArgumentError):
        poly_roots([])


def test_random_polynomials_residual():
    rng = random.Random(4)
    for deg in range(2, 12):
        roots = [complex(rng.uniform(-3, 3), rng.uniform(-3, 3)) for _ in range(deg)]
        coeffs = np.poly(roots)
        got = poly_roots(coeffs)
        norm = np.linalg.norm(coeffs)
        for x in got:
            assert abs(np.polyval(coeffs, x)) < 1e-10 * norm * max(1.0, abs(x)) ** deg
        _close_sets(got, roots, 1e-7)


def test_badly_scaled_roots():
    # roots of modulus ~1e6 and 1e-3 in one polynomial
    roots = [1e6, -2e6 + 1e5j, 3e-3, 1e-3j]
    _close_sets(poly_roots(np.poly(roots)), roots, 1e-9 * 1e6)


def test_roots_of_unity():
    n = 9
    got = poly_roots([1] + [0] * (n - 1) + [-1])
    _close_sets(got, [cmath.exp(2j * cmath.pi * k / n) for k in range(n)], 1e-12)
