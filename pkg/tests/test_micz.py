from fractions import Fraction

import numpy as np
import pytest

from micz_verify import micz
from micz_verify.diffop import DiffOp, commutator, eval_op_at, smat_eval, smat_scale
from micz_verify.exact import QuadExtValue, RationalPoint, random_points
from micz_verify.micz import (
    MAX_ORDER, ConfigError, ConventionMismatch, GaugeField, ProblemConfig, bracket_rhs, build_generators,
    closed_forms, compare, field_strength, gauge_potential, quadratic_sum, verify_closed_forms,
    verify_commutation_relations, verify_gauge_identities, verify_quadratic_relations,
)
from micz_verify.scalar import PoleAtPoint
from micz_verify.report import EXPECTED_FAIL, FLOAT, NORMAL_FORM, PASS, POINTWISE


def zero_matrix(m, p):
    return all(v.is_zero() for row in smat_eval(m, p) for v in row)


@pytest.mark.parametrize("kw", [dict(n=1, two_mu=0), dict(n=2, two_mu=3), dict(n=3, two_mu=2),
                                dict(n=2, two_mu=0, mode="sloppy"), dict(n=2, two_mu=0, points=0)])
def test_config_errors(kw):
    with pytest.raises(ConfigError):
        ProblemConfig(**kw)


def test_config_constants():
    assert ProblemConfig(2, 1).a == 1
    assert ProblemConfig(2, 0).a == Fraction(3, 2)
    assert ProblemConfig(3, 1).c == 1 and ProblemConfig(3, 1).a == Fraction(3, 2)


def test_trivial_background_has_no_field():
    g = field_strength(ProblemConfig(2, 0))
    p = random_points(4, 1, 0)[0]
    assert all(zero_matrix(A, p) for A in g.A)
    assert all(zero_matrix(F, p) for F in g.F.values())


def test_potential_vanishes_on_positive_axis():
    # the canonical form rationalizes 1/(r + x_D), which is 0/0 on the positive x_D axis;
    # the potential extends continuously by 0 there, so check the approach exactly
    g = gauge_potential(ProblemConfig(2, 1))
    t = Fraction(5, 3)
    with pytest.raises(PoleAtPoint):
        smat_eval(g.A[0], RationalPoint([0, 0, 0, t]))
    prev = None
    for k in (10, 100, 1000):
        p = RationalPoint([Fraction(1, k), Fraction(-2, k), Fraction(1, k), t])
        size = max(abs(complex(v)) for A in g.A for row in smat_eval(A, p) for v in row)
        assert size < 3 / k
        prev = size
    assert prev > 0


def test_radial_gauge_condition():
    g = gauge_potential(ProblemConfig(2, 1))
    for p in random_points(4, 20, 3):
        acc = None
        for a in range(1, 5):
            term = smat_eval(smat_scale(g.ctx.x(a), g.A[a - 1]), p)
            acc = term if acc is None else tuple(tuple(u + v for u, v in zip(r1, r2)) for r1, r2 in zip(acc, term))
        assert all(v.is_zero() for row in acc for v in row)


@pytest.mark.parametrize("two_mu", [1, 2])
def test_curvature_matches_closed_form(two_mu):
    g = field_strength(ProblemConfig(2, two_mu))
    for p in random_points(4, 20, 0):
        for key, m in g.F.items():
            a = smat_eval(m, p)
            b = smat_eval(g.F_closed[key], p)
            assert all((u - v).is_zero() for r1, r2 in zip(a, b) for u, v in zip(r1, r2))


@pytest.mark.parametrize("n,two_mu", [(2, 0), (2, 1), (3, 0)])
def test_gauge_identities_pass(n, two_mu):
    rep = verify_gauge_identities(ProblemConfig(n, two_mu, points=5 if n == 3 else 20))
    assert rep.ok
    ids = {it.id.split("@")[0] for it in rep.items}
    assert ids == {"field-strength-closed-form", "lemma-a", "lemma-b", "lemma-c", "lemma-d", "lemma-e",
                   "lemma-f", "lemma-g"}
    assert all(it.strategy == POINTWISE for it in rep.items)


def test_spin_one_background_breaks_only_the_last_identity():
    rep = verify_gauge_identities(ProblemConfig(2, 2))
    assert rep.ok
    for it in rep.items:
        if it.id.startswith("lemma-g"):
            assert it.status == EXPECTED_FAIL and it.residual is not None
        else:
            assert it.status == PASS


def test_field_strength_mismatch_is_fatal(monkeypatch):
    real = GaugeField(2, 1)

    class Broken:
        def __getattr__(self, name):
            return getattr(real, name)

        F_closed = {k: smat_scale(real.ctx.const(2), v) for k, v in real.F_closed.items()}

    monkeypatch.setattr(micz, "field_strength", lambda cfg: Broken())
    with pytest.raises(ConventionMismatch):
        verify_gauge_identities(ProblemConfig(2, 1, points=2))


def test_float_gauge_mode():
    rep = verify_gauge_identities(ProblemConfig(2, 1, mode="float"))
    assert rep.ok and all(it.strategy == FLOAT for it in rep.items)
    bad = verify_gauge_identities(ProblemConfig(2, 2, mode="float"))
    g = [it for it in bad.items if it.id == "lemma-g"][0]
    assert g.status == EXPECTED_FAIL and float(g.residual) > 1e-3


def test_pi_commutator_is_field_strength():
    gs = build_generators(ProblemConfig(2, 1))
    lhs = commutator(gs.pi[0], gs.pi[1])
    rhs = DiffOp.multiplication(gs.ctx, smat_scale(-gs.ctx.i, gs.gauge.F[(1, 2)]))
    assert lhs == rhs
    x2 = DiffOp.scalar(gs.ctx, gs.dim, gs.ctx.x(2))
    assert commutator(gs.pi[1], x2) == DiffOp.scalar(gs.ctx, gs.dim, -gs.ctx.i)


@pytest.mark.parametrize("two_mu", [0, 1])
def test_closed_form_examples(two_mu):
    gs = build_generators(ProblemConfig(2, two_mu))
    forms = closed_forms(gs)
    for name in ("T", "Gamma[-1]", "Gamma[D+1]", "J[1,2]", "A[3]", "M[2]", "-Jhat[1,0]", "-Jhat[-1,0]"):
        lhs, rhs = forms[name]
        assert all(ok for _, _, ok, _ in compare(lhs, rhs, random_points(4, 3, 1))), name
    if two_mu == 0:
        op, pi, x = gs.op, gs.pi, gs.ctx.x
        assert gs.J(1, 2) == op(x(1)) * pi[1] - op(x(2)) * pi[0]
    assert commutator(gs.Gamma_m1, gs.Gamma_D1) == gs.T.scale(gs.ctx.i)


def test_closed_forms_suite():
    assert verify_closed_forms(ProblemConfig(2, 1, points=4)).ok


def test_bracket_examples():
    gs = build_generators(ProblemConfig(2, 1))
    assert commutator(gs.J(1, 2), gs.J(3, 4)).is_zero()
    assert bracket_rhs(gs, 1, 2, 3, 4).is_zero()
    D = gs.D
    # [J_-1,0, J_D+1,0] = i J_D+1,-1
    assert commutator(gs.J(-1, 0), gs.J(D + 1, 0)) == gs.J(D + 1, -1).scale(gs.ctx.i)
    assert bracket_rhs(gs, -1, 0, D + 1, 0) == gs.J(D + 1, -1).scale(gs.ctx.i)


@pytest.mark.parametrize("two_mu", [0, 1])
def test_commutation_suite_n2(two_mu):
    rep = verify_commutation_relations(ProblemConfig(2, two_mu, points=3), hatted_sample=3)
    plain = [it for it in rep.items if not it.id.startswith("[Jhat")]
    assert len({it.id.split("@")[0] for it in plain}) == 210
    assert rep.ok


def test_commutation_normal_form_agrees_with_pointwise():
    gs = build_generators(ProblemConfig(2, 1))
    pts = random_points(4, 2, 9)
    for (A, B), (A2, B2) in [((1, 2), (2, 3)), ((-1, 1), (0, 5)), ((1, 5), (2, 5))]:
        lhs = commutator(gs.J(A, B), gs.J(A2, B2))
        rhs = bracket_rhs(gs, A, B, A2, B2)
        nf = [ok for _, _, ok, _ in compare(lhs, rhs, pts, NORMAL_FORM)]
        pw = [ok for _, _, ok, _ in compare(lhs, rhs, pts, POINTWISE)]
        assert nf == [True] and pw == [True, True]


def test_compare_detects_difference_and_order_limit():
    gs = build_generators(ProblemConfig(2, 1))
    pts = random_points(4, 2, 9)
    lhs, rhs = gs.J(1, 2), gs.J(1, 3)
    assert not any(ok for _, _, ok, _ in compare(lhs, rhs, pts, NORMAL_FORM))
    assert not any(ok for _, _, ok, _ in compare(lhs, rhs, pts, POINTWISE))
    big = gs.pi2 * gs.pi2 * gs.pi[0]
    assert big.order == MAX_ORDER + 1
    with pytest.raises(ValueError):
        list(compare(big, big, pts))


def test_quadratic_examples():
    gs = build_generators(ProblemConfig(2, 1))
    assert quadratic_sum(gs, 1, 2).is_zero()
    gs0 = build_generators(ProblemConfig(2, 0))
    assert quadratic_sum(gs0, -1, -1) == gs0.op(gs0.ctx.const(-3))


def test_quadratic_suite_n2():
    assert verify_quadratic_relations(ProblemConfig(2, 1, points=2)).ok


def test_float_mode_suites():
    for fn in (verify_closed_forms, verify_quadratic_relations):
        rep = fn(ProblemConfig(2, 1, mode="float"))
        assert rep.ok and all(it.strategy == FLOAT for it in rep.items)
        assert max(float(it.residual) for it in rep.items) <= 1e-9
