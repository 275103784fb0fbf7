from fractions import Fraction

import pytest

from premodular.analysis.counting import (arith_functions, count_table, counting, primitive_count_closed, psi,
                                          psi_bruteforce, totient)
from premodular.errors import ArgumentError

# (U = L, PL) for N = 3..12
TABLE = {3: (1, 4), 4: (0, 10), 5: (4, 20), 6: (3, 30), 7: (11, 50), 8: (10, 60),
         9: (21, 90), 10: (16, 100), 11: (35, 150), 12: (30, 140)}


def test_totient_examples():
    assert totient(6) == 2 and totient(3) == 2 and totient(1) == 1 and totient(97) == 96


def test_psi_examples():
    assert psi(3) == 8 == psi_bruteforce(3)


def test_psi_product_formula_against_enumeration():
    for N in range(1, 101):
        assert psi(N) == psi_bruteforce(N)


def test_half_level_convention():
    assert arith_functions(5)[1] == 0
    assert arith_functions(10)[1] == totient(5)


def test_cusp_total_formula():
    for rep in count_table(4):
        assert rep.nu_inf == 3 * rep.phi + 4 * rep.phi_half


def test_level_5():
    rep = counting(4, 5)
    assert (rep.psi, rep.phi, rep.phi_half, rep.L) == (24, 4, 0, 4)


def test_level_3_needs_elliptic_term():
    rep = counting(4, 3)
    assert rep.L == 1 and rep.eps == 1
    assert rep.eps_free == Fraction(1, 3) and rep.flagged


@pytest.mark.parametrize("N", sorted(TABLE))
def test_table(N):
    rep = counting(4, N)
    assert (rep.U, rep.PL) == TABLE[N]
    assert rep.L == rep.U >= 0
    assert rep.weight == 10 * rep.psi
    assert rep.PL == primitive_count_closed(N)


def test_report_serializes():
    d = counting(4, 3).as_dict()
    assert d["eps_free"] == "1/3" and d["L"] == 1


def test_errors():
    with pytest.raises(ArgumentError):
        arith_functions(2)
    with pytest.raises(ArgumentError):
        counting(3, 5)
