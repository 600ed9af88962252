from fractions import Fraction
from math import comb, factorial

import numpy as np
import pytest
from hypothesis import given, strategies as st

from micz_verify.exact import GaussianRational, QuadExtValue
from micz_verify.radial import (
    RadialFunction, RadialOp, SpectralLabel, centrifugal, energy, full_dimension_scalar_check, gauss_laguerre_gram,
    inner, laguerre_closed_form, laguerre_poly, proportional, radial_eigenfunction, radial_operator, twist_map,
    verify_gram_float, verify_radial_eigensystem,
)
from micz_verify.report import FLOAT, NORMAL_FORM

G = GaussianRational


def is_one(q):
    return (q - QuadExtValue(1, 0, q.s)).is_zero()


def test_energy_values():
    assert energy(0, 2, Fraction(1, 2)) == Fraction(-1, 8)
    assert energy(0, 2, 0) == Fraction(-2, 9)
    assert energy(1, 3, 0) == Fraction(-2, 49)
    with pytest.raises(ValueError):
        energy(-1, 2, 0)


def test_laguerre_small_cases():
    assert laguerre_poly(0, 3) == (1,)
    assert laguerre_poly(1, 3) == (4, -1)
    assert laguerre_poly(2, 1) == (3, -3, Fraction(1, 2))


@given(st.integers(0, 8), st.integers(0, 12))
def test_laguerre_recurrence_matches_closed_form(m, alpha):
    assert laguerre_poly(m, alpha) == laguerre_closed_form(m, alpha)


def test_laguerre_orthogonality_oracle():
    # int t^alpha e^-t L_m L_m' dt = Gamma(m + alpha + 1)/m! delta
    alpha = 3
    for m in range(4):
        for m2 in range(4):
            a, b = laguerre_poly(m, alpha), laguerre_poly(m2, alpha)
            val = sum(x * y * factorial(i + j + alpha) for i, x in enumerate(a) for j, y in enumerate(b))
            assert val == (Fraction(factorial(m + alpha), factorial(m)) if m == m2 else 0)


def test_label_arithmetic():
    lab = SpectralLabel(2, 1, 2, 1)
    assert lab.l_mu == 2 and lab.nu == 4 and lab.alpha == 5 and lab.I == 2
    with pytest.raises(ValueError):
        SpectralLabel(0, 0, 2, 0)
    with pytest.raises(ValueError):
        SpectralLabel(1, 0, 2, 2)


def test_ground_state_twisted_function():
    f = radial_eigenfunction(SpectralLabel(1, 0, 2, 0), twisted=True)
    assert f == RadialFunction.make({0: G(2)}, -1, 1)
    assert is_one(inner(f, f, 2))
    # unscaled norm^2 is int r^2 e^-2r dr = 1/4
    g = RadialFunction.make({0: G(1)}, -1, 1)
    assert inner(g, g, 2) == QuadExtValue(Fraction(1, 4), 0, 1)


def test_k1_polynomial_part_is_constant():
    for l in range(4):
        f = radial_eigenfunction(SpectralLabel(1, l, 3, 1), twisted=True)
        assert [j for j, _ in f.poly] == [0]


def test_orthogonality_first_two_states():
    a = radial_eigenfunction(SpectralLabel(1, 0, 2, 0), twisted=True)
    b = radial_eigenfunction(SpectralLabel(2, 0, 2, 0), twisted=True)
    assert inner(a, b, 2).is_zero()


def test_centrifugal_vanishes_for_lowest_scalar_sector():
    assert centrifugal(SpectralLabel(1, 0, 2, 0)) == 0
    H = radial_operator("H", 0, 2, 0)
    want = RadialOp({2: {0: G(Fraction(-1, 2))}, 1: {-1: G(Fraction(-3, 2))}, 0: {-1: G(-1)}})
    assert H == want


@pytest.mark.parametrize("k,l,two_mu,value", [(1, 0, 0, Fraction(3, 2)), (2, 1, 1, 4), (1, 1, 0, Fraction(5, 2))])
def test_gamma_eigenvalues(k, l, two_mu, value):
    lab = SpectralLabel(k, l, 2, two_mu)
    assert lab.nu == value
    psi = radial_eigenfunction(lab, twisted=True)
    G1 = radial_operator("Gamma-1", l, 2, two_mu, twisted=True)
    assert G1.apply(psi) == psi.scale(value)


def test_twisted_T_form():
    That = radial_operator("T", 0, 2, 0, twisted=True)
    assert That == RadialOp({1: {1: G(0, -1)}, 0: {0: G(0, -2)}})


def test_lowering_kills_k1():
    That = radial_operator("T", 2, 2, 1, twisted=True)
    Gp = radial_operator("GammaD+1", 2, 2, 1, twisted=True)
    psi = radial_eigenfunction(SpectralLabel(1, 2, 2, 1), twisted=True)
    assert (That + Gp.scale(G(0, 1))).apply(psi).is_zero()
    up = (That - Gp.scale(G(0, 1))).apply(psi)
    assert proportional(up, radial_eigenfunction(SpectralLabel(2, 2, 2, 1), twisted=True)) is not None


def test_twist_map_example():
    lab = SpectralLabel(1, 0, 2, 0)
    R = radial_eigenfunction(lab)
    assert R.decay == Fraction(2, 3)
    tw = twist_map(lab)
    assert tw.decay == 1 and tw.half_exponent == 2 * (lab.l + lab.mu) - 1
    assert tw == radial_eigenfunction(lab, twisted=True)
    assert is_one(inner(R, R, 2)) and is_one(inner(tw, tw, 2))


def test_radial_function_float_evaluation():
    f = radial_eigenfunction(SpectralLabel(3, 1, 2, 1), twisted=True)
    r = np.linspace(0.1, 5, 7)
    # derivative against a central difference
    h = 1e-6
    assert np.allclose(f.derivative()(r), (f(r + h) - f(r - h)) / (2 * h), rtol=1e-6, atol=1e-8)


def test_radial_function_canonical_sqrt_factor():
    a = RadialFunction.make({0: G(1)}, 0, 1, 8)
    b = RadialFunction.make({0: G(2)}, 0, 1, 2)
    assert a == b and a.scale2 == 2


@pytest.mark.parametrize("n,two_mu", [(2, 0), (2, 1), (3, 0), (3, 1)])
def test_radial_suite(n, two_mu):
    rep = verify_radial_eigensystem(n, two_mu, kmax=3, lmax=2)
    assert rep.ok
    assert all(it.strategy == NORMAL_FORM for it in rep.items)
    prefixes = {it.id.split(" ")[0] for it in rep.items}
    assert {"(a)", "(b)", "(c)", "(d)", "(e)", "twist"} <= prefixes


def test_gauss_laguerre_cross_check():
    rep = verify_gram_float(2, 1, kmax=4, lmax=2)
    assert rep.ok and all(it.strategy == FLOAT for it in rep.items)
    gram = gauss_laguerre_gram(3, 0, 1, 4)
    assert np.allclose(gram, np.eye(4), atol=1e-10)


def test_full_dimension_scalar_check():
    rep = full_dimension_scalar_check(2, kmax=2, lmax=2)
    assert rep.ok
    assert any(it.id == "Gamma-1 psi k=1 l=1" and it.witness["eigenvalue"] == "5/2" for it in rep.items)
