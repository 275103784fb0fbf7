import cmath
import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from premodular.algebra import (MultiPoly, UniPolyView, bareiss_determinant, poly_arith, reduce_y0,
                                resultant, symbols, symmetric_reduce, weighted_degree)
from premodular.errors import ArgumentError, DivisionError, SymmetryError

from strategies import polys, univariate

B, g2, g3, e1, e2, e3, x0, y0, z, alpha, beta = symbols("B g2 g3 e1 e2 e3 x0 y0 z alpha beta")
a, b = g2, g3  # stand-ins for free coefficients in the resultant examples


# -- arithmetic ---------------------------------------------------------------

def test_difference_of_squares():
    assert poly_arith(B + g2, B - g2, "mul") == B ** 2 - g2 ** 2


def test_monomial_cancellation():
    assert poly_arith(alpha ** 2 * beta, alpha ** 2, "exact_div") == beta


def test_exact_div_with_remainder_raises():
    with pytest.raises(DivisionError):
        poly_arith(B ** 2 + 1, B, "exact_div")


def test_exact_div_multiterm():
    p = (B + g2) * (B ** 2 - 3 * g3 + x0)
    assert p.exact_div(B + g2) == B ** 2 - 3 * g3 + x0


def test_unknown_operation():
    with pytest.raises(ArgumentError):
        poly_arith(B, B, "pow")


def test_zero_coefficients_not_stored():
    p = B + g2 - B
    assert p == g2 and len(p) == 1


def test_canonical_equality_and_hash():
    p = (B + 1) * (B - 1)
    q = B ** 2 - 1
    assert p == q and hash(p) == hash(q)


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(polys(), polys())
def test_product_divides_back(p, q):
    if q:
        assert (p * q).exact_div(q) == p


@given(polys(("B", "g2", "x0", "y0", "z"), max_terms=5))
def test_json_round_trip(p):
    assert MultiPoly.from_json(p.to_json()) == p


def test_serialization_format():
    d = (Fraction(1, 2) * B ** 2 - 3 * g2).to_dict()
    assert d["variables"][0] == "B" and len(d["variables"]) == 11
    coeffs = {t["coeff"] for t in d["terms"]}
    assert coeffs == {"1/2", "-3/1"}


def test_evaluate_requires_all_variables():
    with pytest.raises(ArgumentError):
        (B * g2).evaluate({"B": 1.0})


# -- univariate views -----------------------------------------------------------

def test_view_round_trip():
    p = 3 * B ** 3 * g2 - B * x0 + y0
    view = UniPolyView.from_multipoly(p, "B")
    assert view.degree() == 3
    assert view.leading_coefficient() == 3 * g2
    assert view.to_multipoly() == p


# -- resultants -------------------------------------------------------------------

def test_resultant_of_linear_factors():
    assert resultant(B - a, B - b, "B") == a - b


def test_resultant_is_evaluation():
    x = MultiPoly.var("x0")
    assert resultant(x ** 2 - 1, x - 2, "x0") == MultiPoly.constant(3)


def test_resultant_degree_zero_raises():
    with pytest.raises(ArgumentError):
        resultant(B + 1, g2, "B")


@given(univariate(), univariate())
def test_resultant_antisymmetry(p, q):
    sign = (-1) ** (p.degree("B") * q.degree("B"))
    assert resultant(p, q, "B") == sign * resultant(q, p, "B")


@given(univariate(max_deg=2), univariate(max_deg=2), univariate(max_deg=2))
def test_resultant_vanishes_on_common_factor(h, u, v):
    assert not resultant(h * u, h * v, "B")


def test_resultant_nonzero_for_coprime():
    assert resultant(B ** 2 + g2, B - 1, "B") == 1 + g2


def test_bareiss_matches_cofactor_expansion():
    rng = random.Random(3)
    m = [[MultiPoly.constant(rng.randint(-5, 5)) + (g2 if i == j else 0) for j in range(3)] for i in range(3)]

    def det3(m):
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))

    assert bareiss_determinant(m) == det3(m)


# -- symmetric reduction ------------------------------------------------------------

def test_power_sums():
    assert symmetric_reduce(e1 + e2 + e3) == MultiPoly.zero()
    assert symmetric_reduce(e1 * e2 + e1 * e3 + e2 * e3) == -g2 / 4
    assert symmetric_reduce(e1 ** 2 + e2 ** 2 + e3 ** 2) == g2 / 2
    assert symmetric_reduce(e1 * e2 * e3) == g3 / 4


def test_non_symmetric_raises():
    with pytest.raises(SymmetryError):
        symmetric_reduce(e1 ** 2 + e2)


def test_symmetric_reduce_numeric_cross_check():
    rng = random.Random(7)
    p = (B - e1) * (B - e2) * (B - e3) * (e1 ** 3 + e2 ** 3 + e3 ** 3 + x0 * e1 * e2 * e3)
    p = p + (e1 - e2) ** 2 * (e2 - e3) ** 2 * (e1 - e3) ** 2
    red = symmetric_reduce(p)
    for _ in range(5):
        G2, G3 = complex(rng.uniform(-3, 3), rng.uniform(-3, 3)), complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
        roots = _cubic_roots(G2, G3)
        vals = {"B": 0.7 - 0.2j, "x0": 1.3j, "g2": G2, "g3": G3}
        direct = p.evaluate({**vals, "e1": roots[0], "e2": roots[1], "e3": roots[2]})
        reduced = red.evaluate(vals)
        assert abs(direct - reduced) <= 1e-12 * max(1.0, abs(direct))


def _cubic_roots(G2, G3):
    # Cardano for 4x^3 - G2 x - G3
    p, q = -G2 / 4, -G3 / 4
    d = cmath.sqrt((q / 2) ** 2 + (p / 3) ** 3)
    u = (-q / 2 + d) ** (1 / 3)
    w = cmath.exp(2j * cmath.pi / 3)
    out = []
    for k in range(3):
        uk = u * w ** k
        out.append(uk - p / (3 * uk))
    return out


def test_reduce_y0_examples():
    curve = 4 * x0 ** 3 - g2 * x0 - g3
    assert reduce_y0(y0 ** 2) == curve
    assert reduce_y0(y0 ** 3) == y0 * curve
    assert reduce_y0(x0 * z) == x0 * z


@given(polys(("x0", "y0", "z"), max_terms=4, max_exp=5))
def test_reduce_y0_idempotent(p):
    r = reduce_y0(p)
    assert r.degree("y0") <= 1
    assert reduce_y0(r) == r


# -- gradings -------------------------------------------------------------------------

def test_weighted_degree_examples():
    ell2 = (Fraction(4, 81) * B ** 5 - Fraction(7, 27) * g2 * B ** 3 + g3 * B ** 2 / 3
            + g2 ** 2 * B / 3 - g2 * g3)
    assert weighted_degree(ell2, "S") == (5, 5, True)
    assert weighted_degree(z ** 3 - 3 * x0 * z - y0, "M") == (3, 3, True)
    assert weighted_degree(B + g2, "S") == (1, 2, False)


def test_weighted_degree_rejects_zero_and_unknown_grading():
    with pytest.raises(ArgumentError):
        weighted_degree(MultiPoly.zero(), "S")
    with pytest.raises(ArgumentError):
        weighted_degree(B, "Q")


@given(st.sampled_from(["S", "M"]), polys(("B", "g2", "g3")), polys(("B", "g2", "g3")))
def test_weights_add_under_products(grading, p, q):
    if p and q:
        lp, hp, _ = weighted_degree(p, grading)
        lq, hq, _ = weighted_degree(q, grading)
        lo, hi, _ = weighted_degree(p * q, grading)
        assert lo >= lp + lq and hi <= hp + hq
