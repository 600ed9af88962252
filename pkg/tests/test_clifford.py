from fractions import Fraction

import pytest

from micz_verify.clifford import (
    I_UNIT, NotScalar, Rep, UnsupportedRep, anticommutator, casimir, casimir_matrix, commutator, gamma_matrices,
    identity, is_hermitian, mat_mul, mat_scale, rep_s2mu, scalar_value, so_bracket_residual, zeros,
)
from micz_verify.exact import GaussianRational


@pytest.mark.parametrize("n", [2, 3, 4])
def test_clifford_relations(n):
    g = gamma_matrices(n)
    d = 2 ** (n - 1)
    assert len(g) == 2 * n - 1
    for a, ga in enumerate(g):
        assert is_hermitian(ga)
        for b, gb in enumerate(g):
            want = mat_scale(2, identity(d)) if a == b else zeros(d)
            assert anticommutator(ga, gb) == want


def test_n2_volume_element_sign():
    g = gamma_matrices(2)
    # recorded sign of the construction
    assert scalar_value(mat_mul(mat_mul(g[0], g[1]), g[2])) == GaussianRational(0, 1)


@pytest.mark.parametrize("n,two_mu", [(2, 0), (2, 1), (3, 0), (3, 1), (2, 2)])
def test_rep_invariants(n, two_mu):
    rep = rep_s2mu(n, two_mu)
    assert rep.dim == {0: 1, 1: 2 ** (n - 1), 2: 3}[two_mu]
    for (a, b), m in rep.generators.items():
        assert is_hermitian(m)
        assert rep.gen(b, a) == mat_scale(-1, m)
    assert so_bracket_residual(rep.generators, 2 * n - 1) == []
    if two_mu == 0:
        assert all(m == zeros(1) for m in rep.generators.values())


def test_so3_bracket_example():
    rep = rep_s2mu(2, 1)
    # [g_ab, g_cd] = i(d_ac g_db + d_bd g_ca - d_ad g_cb - d_bc g_da) with a,b,c,d = 1,2,2,3
    lhs = commutator(rep.gen(1, 2), rep.gen(2, 3))
    assert lhs == mat_scale(-I_UNIT, rep.gen(3, 1)) == mat_scale(I_UNIT, rep.gen(1, 3))


@pytest.mark.parametrize("n,two_mu,value", [(2, 1, Fraction(3, 4)), (3, 1, Fraction(5, 2)), (2, 2, 2),
                                            (2, 0, 0), (3, 0, 0)])
def test_casimir(n, two_mu, value):
    rep = rep_s2mu(n, two_mu)
    assert casimir(rep) == value
    # independent oracle: entry-by-entry sum of squares over a < b
    acc = zeros(rep.dim)
    for a in range(1, 2 * n):
        for b in range(a + 1, 2 * n):
            g = rep.gen(a, b)
            acc = tuple(tuple(acc[i][j] + sum((g[i][k] * g[k][j] for k in range(rep.dim)), GaussianRational())
                              for j in range(rep.dim)) for i in range(rep.dim))
    assert acc == mat_scale(value, identity(rep.dim))


def test_spinor_casimir_formula():
    for n in (2, 3):
        m = 2 * n - 1
        assert casimir(rep_s2mu(n, 1)) == Fraction(m * (m - 1), 8)


def test_unsupported_and_not_scalar():
    with pytest.raises(UnsupportedRep):
        rep_s2mu(3, 2)
    bad = Rep(2, 1, 2, {(1, 2): ((GaussianRational(1), GaussianRational()), (GaussianRational(), GaussianRational()))})
    with pytest.raises(NotScalar):
        casimir(bad)
