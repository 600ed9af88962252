"""Acceptance criteria, one test each.  Every test prints a single
ACCEPTANCE line with its verdict and wall time; the lines are repeated in
the terminal summary."""
import time
from fractions import Fraction
from functools import lru_cache

from micz_verify import micz, radial
from micz_verify.cli import SuiteConfig, run_suite
from micz_verify.clifford import anticommutator, casimir, gamma_matrices, identity, mat_scale, rep_s2mu, zeros
from micz_verify.micz import (
    FLOAT_TOL, ProblemConfig, verify_closed_forms, verify_commutation_relations, verify_gauge_identities,
    verify_quadratic_relations,
)
from micz_verify.radial import energy, verify_gram_float, verify_radial_eigensystem
from micz_verify.report import EXPECTED_FAIL, FLOAT, PASS
from micz_verify.reps import abstract_algebra_checks, uniqueness_search, level_weight, verify_decompositions

RESULTS = {}
CONFIGS = [(2, 0), (2, 1), (3, 0), (3, 1)]


def cold():
    """Forget cached symbolic constructions so timings start from scratch."""
    micz._gauge.cache_clear()
    micz._generators.cache_clear()
    radial.laguerre_poly.cache_clear()


def record(num, name, ok, seconds, limit=None, detail=""):
    within = limit is None or seconds < limit
    verdict = "PASS" if ok and within else "FAIL"
    bound = f" (limit {limit:g} s)" if limit is not None else ""
    line = f"ACCEPTANCE {num} {name}: {verdict} in {seconds:.2f} s{bound}" + (f" {detail}" if detail else "")
    RESULTS[num] = line
    print(line)
    assert ok, line
    assert within, line


@lru_cache(maxsize=None)
def exact_algebra_reports(n, two_mu):
    cfg = ProblemConfig(n, two_mu, points=20)
    out = {"closed-forms": verify_closed_forms(cfg), "commutation": verify_commutation_relations(cfg)}
    if n == 2:
        out["quadratic"] = verify_quadratic_relations(cfg)
    return out


@lru_cache(maxsize=None)
def exact_gauge_report(n, two_mu):
    return verify_gauge_identities(ProblemConfig(n, two_mu, points=20))


def test_1_clifford_casimir():
    t0 = time.perf_counter()
    ok = True
    for n in (2, 3, 4):
        g = gamma_matrices(n)
        d = 2 ** (n - 1)
        ok &= all(anticommutator(a, b) == (mat_scale(2, identity(d)) if i == j else zeros(d))
                  for i, a in enumerate(g) for j, b in enumerate(g))
    ok &= casimir(rep_s2mu(2, 1)) == Fraction(3, 4) and casimir(rep_s2mu(3, 1)) == Fraction(5, 2)
    record(1, "gamma relations and Casimir values", ok, time.perf_counter() - t0, 1)


def test_2_gauge_suite():
    worst, ok, counts = 0.0, True, []
    for n, two_mu in CONFIGS:
        cold()
        t0 = time.perf_counter()
        rep = exact_gauge_report(n, two_mu)
        dt = time.perf_counter() - t0
        worst = max(worst, dt)
        pts = {it.id.split("@")[1] for it in rep.items}
        items = {it.id.split("@")[0] for it in rep.items}
        ok &= rep.ok and len(pts) >= 20 and len(items) == 8 and all(it.status == PASS for it in rep.items)
        counts.append(f"n={n},mu={Fraction(two_mu, 2)}:{len(rep.items)}")
    record(2, "gauge identities and field-strength agreement", ok, worst, 60, " ".join(counts))


def test_3_falsifier():
    cold()
    t0 = time.perf_counter()
    rep = verify_gauge_identities(ProblemConfig(2, 2, points=20))
    dt = time.perf_counter() - t0
    g = [it for it in rep.items if it.id.startswith("lemma-g")]
    keep = [it for it in rep.items if it.id.split("@")[0] in ("lemma-c", "lemma-d")]
    ok = (all(it.status == EXPECTED_FAIL and it.residual for it in g)
          and all(it.status == PASS for it in keep) and len(keep) == 40)
    record(3, "spin-1 background breaks the F.F contraction only", ok, dt, 5,
           f"expected-fail={len(g)}")


def test_4_algebra_suite():
    cold()
    t0 = time.perf_counter()
    ok, notes = True, []
    for n, two_mu in CONFIGS:
        reps = exact_algebra_reports(n, two_mu)
        for name, rep in reps.items():
            ok &= rep.ok
        comm = reps["commutation"]
        pairs = {it.id.split("@")[0] for it in comm.items if not it.id.startswith("[Jhat")}
        pts = {it.id.split("@")[1] for it in comm.items if "@" in it.id}
        if n == 2:
            ok &= len(pairs) == 210
            # every unordered (B, C) over the D + 3 = 7 indices
            ok &= len({it.id.split("@")[0] for it in reps["quadratic"].items}) == 28
        else:
            ok &= len(pairs) >= 60 and (not pts or len(pts) >= 20)
        notes.append(f"n={n},mu={Fraction(two_mu, 2)}:{len(pairs)} pairs")
    exact_time = time.perf_counter() - t0
    cold()
    t1 = time.perf_counter()
    cfg = ProblemConfig(2, 1, mode="float")
    for fn in (verify_closed_forms, verify_commutation_relations, verify_quadratic_relations):
        ok &= fn(cfg).ok
    float_time = time.perf_counter() - t1
    ok &= float_time < 10
    record(4, "commutation, quadratic and closed-form identities", ok, exact_time, 600,
           f"float {float_time:.2f} s (limit 10 s); " + " ".join(notes))


def test_5_radial_suite():
    cold()
    t0 = time.perf_counter()
    ok = True
    for n, two_mu in CONFIGS:
        ok &= verify_radial_eigensystem(n, two_mu, 4, 4).ok
        ok &= verify_gram_float(n, two_mu, 4, 4).ok
    ok &= energy(0, 2, Fraction(1, 2)) == Fraction(-1, 8)
    ok &= energy(0, 2, 0) == Fraction(-2, 9)
    ok &= energy(1, 3, 0) == Fraction(-2, 49)
    record(5, "radial eigensystem, twist map and Gauss-Laguerre Gram", ok, time.perf_counter() - t0, 30)


def test_6_full_dimension_scalar():
    cold()
    t0 = time.perf_counter()
    rep = radial.full_dimension_scalar_check(2, 3, 3)
    hits = [it for it in rep.items if it.id.startswith("Gamma-1 psi")]
    ok = rep.ok and len(hits) == 12  # k = 1..3, l = 0..3
    record(6, "4-dimensional Gamma_-1 eigenvalues match the radial sector", ok, time.perf_counter() - t0, 60)


def test_7_representation_suite():
    t0 = time.perf_counter()
    ok = True
    for n in (2, 3):
        rep = abstract_algebra_checks(n, 0)
        ok &= rep.ok and any(it.id.startswith("[H0, E") for it in rep.items)
    dims = {}
    for n, two_mu in CONFIGS:
        rep = verify_decompositions(n, two_mu, 6)
        ok &= rep.ok
        for I in range(7):
            ok &= uniqueness_search(n, two_mu, I, 7) == [level_weight(n, two_mu, I)]
        for it in rep.items:
            if it.id.startswith("(a)"):
                dims[(n, two_mu, it.id)] = it.witness["dim"]
    ok &= dims[(2, 0, "(a) dim level I=2")] == 14 and dims[(2, 1, "(a) dim level I=1")] == 16
    record(7, "abstract algebra, branching and degeneracies", ok, time.perf_counter() - t0, 10)


def test_8_determinism():
    t0 = time.perf_counter()
    cfg = SuiteConfig(n=2, mu="1/2", suites=("all",), seed=7, format="json")
    a, code_a = run_suite(cfg)
    cold()
    b, code_b = run_suite(cfg)
    ok = code_a == code_b == 0 and a.to_json() == b.to_json()
    record(8, "identical configuration gives byte-identical JSON", ok, time.perf_counter() - t0,
           detail=f"{len(a.items)} items")


def test_9_float_mode():
    t0 = time.perf_counter()
    ok, checked, worst = True, 0, 0.0
    for n, two_mu in CONFIGS:
        exact = dict(exact_algebra_reports(n, two_mu))
        exact["gauge"] = exact_gauge_report(n, two_mu)
        fcfg = ProblemConfig(n, two_mu, mode="float")
        floats = {"gauge": verify_gauge_identities(fcfg), "closed-forms": verify_closed_forms(fcfg),
                  "commutation": verify_commutation_relations(fcfg)}
        if "quadratic" in exact:
            floats["quadratic"] = verify_quadratic_relations(fcfg)
        for suite, rep in exact.items():
            passing = {it.id.split("@")[0] for it in rep.items if it.status == PASS}
            fl = {it.id: it for it in floats[suite].items}
            for ident in passing:
                it = fl.get(ident)
                if it is None or it.strategy != FLOAT:
                    ok = False
                    continue
                res = float(it.residual)
                worst = max(worst, res)
                ok &= res <= FLOAT_TOL and it.status == PASS
                checked += 1
    record(9, "float residuals of exact-passing identities", ok, time.perf_counter() - t0,
           detail=f"{checked} identities, worst relative residual {worst:.2e}")
