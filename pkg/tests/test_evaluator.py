import random

import pytest

from premodular.algebra import symbols
from premodular.analysis.evaluator import (PremodularEvaluator, eval_Zn, exact_W, magnitude_scale,
                                           specialized_W)
from premodular.elliptic.torus import TorusContext
from premodular.errors import ArgumentError, PoleError

z, x0, y0 = symbols("z x0 y0")


def _draws(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        tau = complex(rng.uniform(-0.5, 0.5), rng.uniform(0.9, 1.6))
        yield tau, rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95)


def test_W1_and_W2():
    assert exact_W(1) == z
    assert exact_W(2) == z ** 3 - 3 * x0 * z - y0


def test_n2_evaluation_formula():
    tau, r, s = 0.1 + 1.2j, 0.27, 0.61
    ctx = TorusContext(tau)
    Z = ctx.hecke_Z(r, s)
    wp, dwp, _ = ctx.weierstrass(ctx.from_rs(r, s))
    assert abs(eval_Zn(2, r, s, tau) - (Z ** 3 - 3 * wp * Z - dwp)) < 1e-12 * abs(dwp)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_horner_agrees_with_substitution(n):
    ev = PremodularEvaluator(n)
    for tau, r, s in _draws(n, 6):
        a, b = ev(r, s, tau), ev.horner(r, s, tau)
        assert abs(a - b) <= 1e-12 * max(abs(a), ev.scale(r, s, tau) * 1e-3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_half_period_zero(n):
    for tau in (1j, 0.3 + 0.9j):
        ctx = TorusContext(tau)
        scale = magnitude_scale(n, {"z": 0, "x0": ctx.e[0], "y0": 0, "g2": ctx.g2, "g3": ctx.g3})
        assert abs(eval_Zn(n, 0.5, 0, tau)) < 1e-10 * scale


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_trivial_zeros_at_two_torsion(n):
    ev = PremodularEvaluator(n)
    for tau, _, _ in _draws(30 + n, 3):
        for r, s in ((0.5, 0), (0, 0.5), (0.5, 0.5)):
            assert abs(ev(r, s, tau)) < 1e-10 * ev.scale(r, s, tau)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_weight_law(n):
    k = n * (n + 1) // 2
    for tau, r, s in _draws(40 + n, 5):
        lhs = eval_Zn(n, s, -r, -1 / tau)
        rhs = tau ** k * eval_Zn(n, r, s, tau)
        assert abs(lhs - rhs) < 1e-8 * max(1.0, abs(rhs))


def test_evaluator_caches():
    ev = PremodularEvaluator(3)
    v = ev(0.2, 0.3, 1j)
    assert ev(0.2, 0.3, 1j) == v and len(ev._cache) == 1


def test_specialized_coefficients_are_highest_first():
    ctx = TorusContext(1j)
    c = specialized_W(2, 1.5, 0.25, ctx.g2, ctx.g3)
    assert c == [1, 0, -4.5, -0.25]


def test_errors():
    with pytest.raises(ArgumentError):
        exact_W(5)
    with pytest.raises(ArgumentError):
        eval_Zn(2, 0.1, 0.2)
    with pytest.raises(PoleError):
        eval_Zn(3, 1, 0, 1j)
