"""Gauge field, symmetry generators and the identity suites built on them.

Everything here is exact: coefficients live in the scalar field, operators are
normal ordered, and pointwise checks evaluate at rational points in
Q(i)(sqrt s).  A float path evaluates the same objects in double precision.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations

import numpy as np

from . import clifford
from .diffop import (
    DiffOp, anticommutator, commutator, conjugate_sqrt_r, eval_op_at, eval_op_float,
    float_residual, smat_add, smat_diff, smat_from_const, smat_scale, smat_sub, smat_zero,
)
from .exact import GaussianRational, QuadExtValue, RationalPoint, random_points
from .pointwise import PointMatrix
from .report import FLOAT, NORMAL_FORM, POINTWISE, VerificationReport, stopwatch
from .scalar import context, eval_float

FLOAT_POINTS = 200
FLOAT_TOL = 1e-9
MAX_ORDER = 4


class ConfigError(ValueError):
    pass


class ConventionMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class ProblemConfig:
    n: int
    two_mu: int
    mode: str = "exact"
    points: int = 20
    seed: int = 0

    def __post_init__(self):
        if self.n < 2:
            raise ConfigError("n must be at least 2")
        if self.two_mu not in (0, 1, 2):
            raise ConfigError("two_mu must be 0, 1 or 2")
        if self.two_mu == 2 and self.n != 2:
            raise ConfigError("the mu=1 control exists only for n=2")
        if self.mode not in ("exact", "float"):
            raise ConfigError(f"unknown mode {self.mode!r}")
        if self.points < 1:
            raise ConfigError("points must be positive")

    @property
    def D(self) -> int:
        return 2 * self.n

    @property
    def mu(self) -> Fraction:
        return Fraction(self.two_mu, 2)

    @property
    def c(self) -> Fraction:
        return (self.n - 1) * self.mu

    @property
    def a(self) -> Fraction:
        return self.n - Fraction(1, 2) - self.c

    def echo(self) -> dict:
        return {"n": self.n, "mu": str(self.mu), "mode": self.mode,
                "points": self.points, "seed": self.seed}


# ---------------------------------------------------------------------------
# gauge field

class GaugeField:
    """A_1..A_D and, once requested, the field strength computed two ways."""

    def __init__(self, n: int, two_mu: int):
        self.n, self.two_mu = n, two_mu
        self.D = 2 * n
        self.ctx = context(self.D)
        self.rep = clifford.rep_s2mu(n, two_mu)
        self.dim = self.rep.dim
        self.A = self._potential()

    def _const(self, m):
        return smat_from_const(self.ctx, m)

    def _potential(self):
        ctx, D = self.ctx, self.D
        r = ctx.r
        pref = -(r * (r + ctx.x(D))).inverse()
        out = []
        for b in range(1, D + 1):
            m = smat_zero(ctx, self.dim)
            if b < D:
                for a in range(1, D):
                    if a != b:
                        m = smat_add(m, smat_scale(pref * ctx.x(a), self._const(self.rep.gen(a, b))))
            out.append(m)
        return tuple(out)

    def potential(self, alpha: int):
        return self.A[alpha - 1]

    @cached_property
    def F(self) -> dict:
        """Curvature d_a A_b - d_b A_a + i[A_a, A_b], all ordered pairs."""
        from .diffop import smat_mul

        ctx, D = self.ctx, self.D
        out = {}
        for a in range(1, D + 1):
            out[(a, a)] = smat_zero(ctx, self.dim)
            for b in range(a + 1, D + 1):
                Aa, Ab = self.A[a - 1], self.A[b - 1]
                br = smat_sub(smat_mul(Aa, Ab), smat_mul(Ab, Aa))
                m = smat_add(smat_sub(smat_diff(Ab, a), smat_diff(Aa, b)), smat_scale(ctx.i, br))
                out[(a, b)] = m
                out[(b, a)] = smat_scale(ctx.const(-1), m)
        return out

    @cached_property
    def F_closed(self) -> dict:
        """The explicit formulas for F_Db and F_ab (a, b < D)."""
        ctx, D, rep = self.ctx, self.D, self.rep
        r, xD = ctx.r, ctx.x(D)
        g = lambda a, b: self._const(rep.gen(a, b))
        out = {}
        inv_r3 = (r * ctx.s).inverse()
        for b in range(1, D):
            m = smat_zero(ctx, self.dim)
            for a in range(1, D):
                if a != b:
                    m = smat_add(m, smat_scale(ctx.x(a) * inv_r3, g(a, b)))
            out[(D, b)] = m
            out[(b, D)] = smat_scale(ctx.const(-1), m)
        out[(D, D)] = smat_zero(ctx, self.dim)
        q = r * (r + xD)
        c1 = -2 * q.inverse()
        c2 = (q * q).inverse()
        w = 2 + xD * r.inverse()
        for a in range(1, D):
            out[(a, a)] = smat_zero(ctx, self.dim)
            for b in range(a + 1, D):
                m = smat_scale(c1, g(a, b))
                acc = smat_zero(ctx, self.dim)
                for cc in range(1, D):
                    xc = ctx.x(cc)
                    t = smat_sub(smat_scale(ctx.x(a), g(cc, b)), smat_scale(ctx.x(b), g(cc, a)))
                    acc = smat_add(acc, smat_scale(w * xc, t))
                    for d in range(1, D):
                        br = clifford.commutator(rep.gen(d, a), rep.gen(cc, b))
                        if clifford.is_zero(br):
                            continue
                        acc = smat_add(acc, smat_scale(ctx.i * ctx.x(d) * xc, self._const(br)))
                m = smat_add(m, smat_scale(c2, acc))
                out[(a, b)] = m
                out[(b, a)] = smat_scale(ctx.const(-1), m)
        return out

    @lru_cache(maxsize=None)
    def dF(self, kappa: int, mu: int, nu: int):
        """d_kappa F_mu,nu (symbolic)."""
        if mu > nu:
            return smat_scale(self.ctx.const(-1), self.dF(kappa, nu, mu))
        return smat_diff(self.F[(mu, nu)], kappa)


@lru_cache(maxsize=None)
def _gauge(n: int, two_mu: int) -> GaugeField:
    return GaugeField(n, two_mu)


def gauge_potential(cfg: ProblemConfig) -> GaugeField:
    return _gauge(cfg.n, cfg.two_mu)


def field_strength(cfg: ProblemConfig) -> GaugeField:
    g = _gauge(cfg.n, cfg.two_mu)
    g.F
    g.F_closed
    return g


# ---------------------------------------------------------------------------
# Lemma-type identities, written once over an abstract matrix backend.
# Each check yields (label, terms) where the terms must sum to zero.

class _ExactBackend:
    def __init__(self, g: GaugeField, p: RationalPoint):
        self.p, self.s, self.dim = p, p.s, g.dim
        self.x = {a: p.coords[a - 1] for a in range(1, g.D + 1)}
        self._g = g
        self._cache = {}
        self.iI = PointMatrix.scalar(QuadExtValue(GaussianRational(0, 1), 0, p.s), g.dim, p.s)
        self.one = PointMatrix.scalar(1, g.dim, p.s)

    def mat(self, m):
        key = id(m)
        hit = self._cache.get(key)
        if hit is None:
            hit = (m, PointMatrix.from_quad([[eval_one(v, self.p) for v in row] for row in m], self.s))
            self._cache[key] = hit
        return hit[1]

    def mul_i(self, m):
        return self.iI * m

    def num(self, q):
        return Fraction(q)

    def combine(self, terms):
        acc = terms[0]
        for t in terms[1:]:
            acc = acc + t
        return acc


def eval_one(v, p):
    from .scalar import eval_exact

    return eval_exact(v, p)


class _FloatBackend:
    def __init__(self, g: GaugeField, pts: np.ndarray):
        self.pts, self.dim = pts, g.dim
        self.s = np.sum(pts * pts, axis=1)[:, None, None]
        self.x = {a: pts[:, a - 1][:, None, None] for a in range(1, g.D + 1)}
        self._cache = {}
        self.one = np.broadcast_to(np.eye(g.dim, dtype=complex), (len(pts), g.dim, g.dim))

    def mat(self, m):
        key = id(m)
        hit = self._cache.get(key)
        if hit is None:
            arr = np.zeros((len(self.pts), self.dim, self.dim), dtype=complex)
            for i, row in enumerate(m):
                for j, v in enumerate(row):
                    if v:
                        arr[:, i, j] = eval_float(v, self.pts)
            hit = (m, arr)
            self._cache[key] = hit
        return hit[1]

    def mul_i(self, m):
        return 1j * m

    def num(self, q):
        return float(q)


def _lemma_checks(g: GaugeField, B, c2: Fraction, c: Fraction):
    """Generator over (item, label, terms)."""
    D, n = g.D, g.n
    idx = range(1, D + 1)
    F = lambda a, b: B.mat(g.F[(a, b)])
    A = lambda a: B.mat(g.A[a - 1])
    dF = lambda k, a, b: B.mat(g.dF(k, a, b))
    s, x = B.s, B.x
    c2, c, shift = B.num(c2), B.num(c), B.num(n - Fraction(3, 2))

    def nablaF(k, a, b):
        # [nabla_k, F_ab] = d_k F_ab + i [A_k, F_ab]
        return dF(k, a, b) + B.mul_i(A(k) @ F(a, b) - F(a, b) @ A(k))

    # closed form against curvature
    for a in idx:
        for b in idx:
            if a < b:
                yield "F", f"F[{a},{b}]", [F(a, b), -B.mat(g.F_closed[(a, b)])]

    terms = [F(a, b) @ F(a, b) for a in idx for b in idx if a != b]
    yield "a", "F.F", terms + [B.one * (-2 * c2) * (1 / (s * s))]

    for k in idx:
        for a in idx:
            for b in idx:
                if a < b:
                    yield "b", f"[{k};{a},{b}]", [
                        nablaF(k, a, b),
                        -(1 / s) * (x[a] * F(b, k) + x[b] * F(k, a) - 2 * x[k] * F(a, b)),
                    ]

    yield "c", "x.A", [x[a] * A(a) for a in idx]

    for b in idx:
        yield "d", f"x.F[:,{b}]", [x[a] * F(a, b) for a in idx]

    for b in idx:
        yield "e", f"div F[:,{b}]", [nablaF(a, a, b) for a in idx]

    for m in idx:
        for v in idx:
            if m >= v:
                continue
            for al in idx:
                for be in idx:
                    if al >= be:
                        continue
                    t = [s * (F(m, v) @ F(al, be) - F(al, be) @ F(m, v))]
                    delta = []
                    if al == v:
                        delta.append(F(m, be))
                    if al == m:
                        delta.append(-F(v, be))
                    if be == v:
                        delta.append(F(al, m))
                    if be == m:
                        delta.append(-F(al, v))
                    rhs = (x[m] * x[al] * F(be, v) + x[m] * x[be] * F(v, al)
                           - x[v] * x[al] * F(be, m) - x[v] * x[be] * F(m, al))
                    t += [B.mul_i(d) for d in delta]
                    t.append(-B.mul_i((1 / s) * rhs))
                    yield "f", f"[{m},{v};{al},{be}]", t

    for al in idx:
        for be in idx:
            if al > be:
                continue
            t = [s * (F(l, al) @ F(l, be)) for l in idx]
            scal = (-x[al] * x[be] / (s * s)) + ((1 / s) if al == be else 0)
            t.append(B.one * (-c) * scal)
            t.append(-B.mul_i(F(al, be)) * shift)
            yield "g", f"[{al},{be}]", t


_LEMMA_ITEMS = {
    "F": ("field-strength-closed-form", "field strength: curvature formula vs closed form"),
    "a": ("lemma-a", "gauge identity (a): F.F = 2 c2 / r^4"),
    "b": ("lemma-b", "gauge identity (b): covariant derivative of F"),
    "c": ("lemma-c", "gauge identity (c): x.A = 0"),
    "d": ("lemma-d", "gauge identity (d): x_mu F_mu,nu = 0"),
    "e": ("lemma-e", "gauge identity (e): covariant divergence of F"),
    "f": ("lemma-f", "gauge identity (f): quartic bracket of F"),
    "g": ("lemma-g", "gauge identity (g): F.F contraction in s^(2mu)"),
}


def _float_points(D: int, count: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    return rng.uniform(0.5, 2.0, size=(count, D)) * rng.choice([-1.0, 1.0], size=(count, D))


def verify_gauge_identities(cfg: ProblemConfig) -> VerificationReport:
    g = field_strength(cfg)
    c2 = clifford.casimir(g.rep)
    rep = VerificationReport(cfg.echo())
    falsifier = cfg.two_mu == 2
    order = list(_LEMMA_ITEMS)
    if cfg.mode == "float":
        pts = _float_points(g.D, FLOAT_POINTS, cfg.seed)
        worst = {k: (0.0, None) for k in order}
        with stopwatch() as sw:
            B = _FloatBackend(g, pts)
            for item, label, terms in _lemma_checks(g, B, c2, cfg.c):
                tot = sum(terms[1:], terms[0])
                scale = sum(np.max(np.abs(t), axis=(1, 2)) for t in terms)
                res = np.max(np.abs(tot), axis=(1, 2))
                ratio = np.where(scale > 0, res / np.where(scale > 0, scale, 1.0), 0.0)
                j = int(np.argmax(ratio))
                if ratio[j] > worst[item][0] or worst[item][1] is None:
                    worst[item] = (float(ratio[j]), {"label": label, "point": [repr(v) for v in pts[j]]})
        for k in order:
            ident, anchor = _LEMMA_ITEMS[k]
            res, wit = worst[k]
            if k == "F" and res > FLOAT_TOL:
                raise ConventionMismatch(f"curvature and closed-form field strength differ: {wit}")
            rep.add("gauge", ident, anchor, FLOAT, res <= FLOAT_TOL, witness=wit,
                    residual=f"{res:.3e}", millis=sw[0], expected_fail=falsifier and k == "g")
        return rep

    for pi, p in enumerate(random_points(g.D, cfg.points, cfg.seed)):
        B = _ExactBackend(g, p)
        status = {k: None for k in order}
        with stopwatch() as sw:
            for item, label, terms in _lemma_checks(g, B, c2, cfg.c):
                if status[item] is not None:
                    continue
                tot = B.combine(terms)
                if not tot.is_zero():
                    status[item] = {"label": label, "matrix": tot.to_json()}
                    if item == "F":
                        raise ConventionMismatch(
                            f"curvature and closed-form field strength differ at {p} entry {label}")
        for k in order:
            ident, anchor = _LEMMA_ITEMS[k]
            bad = status[k]
            rep.add("gauge", f"{ident}@p{pi}", anchor, POINTWISE, bad is None,
                    witness=p.to_json(), residual=bad, millis=sw[0],
                    expected_fail=falsifier and k == "g")
    return rep


# ---------------------------------------------------------------------------
# generators

def index_set(D: int) -> list[int]:
    return [-1, 0] + list(range(1, D + 2))


def eta(A: int, B: int, D: int) -> int:
    if A != B:
        return 0
    return 1 if A in (-1, 0) else -1


class GeneratorSet:
    """J_AB from the defining commutators; the hatted family on demand."""

    def __init__(self, n: int, two_mu: int):
        if two_mu not in (0, 1):
            raise ConfigError("generators are built for mu in {0, 1/2} only")
        self.gauge = _gauge(n, two_mu)
        g = self.gauge
        self.n, self.two_mu, self.D, self.ctx, self.dim = n, two_mu, g.D, g.ctx, g.dim
        self.c = (n - 1) * Fraction(two_mu, 2)
        self.a = n - Fraction(1, 2) - self.c
        ctx, D, dim = self.ctx, self.D, self.dim
        self.op = lambda v: DiffOp.scalar(ctx, dim, v)
        r = ctx.r
        self.pi = [DiffOp.partial(ctx, dim, al).scale(-ctx.i) + DiffOp.multiplication(ctx, g.A[al - 1])
                   for al in range(1, D + 1)]
        pi2 = DiffOp.zero(ctx, dim)
        for p in self.pi:
            pi2 = pi2 + p * p
        self.pi2 = pi2
        self.Gamma = [self.op(r) * p for p in self.pi]
        self.X = self.op(r) * pi2 + self.op(ctx.const(self.c) * r.inverse())
        self.Y = self.op(r)
        self.Gamma_m1 = (self.X + self.Y).scale(Fraction(1, 2))
        self.Gamma_D1 = (self.X - self.Y).scale(Fraction(1, 2))
        self.T = commutator(self.Gamma_D1, self.Gamma_m1).scale(ctx.i)
        self._J: dict = {}
        self._hat: dict = {}
        self._Z: dict = {}
        self._W: dict = {}

    @property
    def indices(self) -> list[int]:
        return index_set(self.D)

    def Z(self, al: int) -> DiffOp:
        if al not in self._Z:
            self._Z[al] = commutator(self.Gamma[al - 1], self.X).scale(self.ctx.i)
        return self._Z[al]

    def W(self, al: int) -> DiffOp:
        if al not in self._W:
            self._W[al] = commutator(self.Gamma[al - 1], self.Y).scale(self.ctx.i)
        return self._W[al]

    def A_vec(self, al: int) -> DiffOp:
        return (self.Z(al) - self.W(al)).scale(Fraction(1, 2))

    def M_vec(self, al: int) -> DiffOp:
        return (self.Z(al) + self.W(al)).scale(Fraction(1, 2))

    def _build(self, A: int, B: int) -> DiffOp:
        D = self.D
        if 1 <= A <= D and 1 <= B <= D:
            return commutator(self.Gamma[A - 1], self.Gamma[B - 1]).scale(self.ctx.i)
        if 1 <= A <= D and B == D + 1:
            return self.A_vec(A)
        if A == -1 and 1 <= B <= D:
            return -self.M_vec(B)
        if A == 0 and 1 <= B <= D:
            return -self.Gamma[B - 1]
        if A == -1 and B == D + 1:
            return -self.T
        if A == 0 and B == D + 1:
            return -self.Gamma_D1
        if A == -1 and B == 0:
            return self.Gamma_m1
        raise KeyError((A, B))

    def J(self, A: int, B: int) -> DiffOp:
        if A == B:
            return DiffOp.zero(self.ctx, self.dim)
        if A > B:
            return -self.J(B, A)
        if (A, B) not in self._J:
            self._J[(A, B)] = self._build(A, B)
        return self._J[(A, B)]

    def J_hat(self, A: int, B: int) -> DiffOp:
        if A == B:
            return DiffOp.zero(self.ctx, self.dim)
        if A > B:
            return -self.J_hat(B, A)
        if (A, B) not in self._hat:
            self._hat[(A, B)] = conjugate_sqrt_r(self.J(A, B))
        return self._hat[(A, B)]

    def labels(self) -> list[tuple[int, int]]:
        return list(combinations(self.indices, 2))


@lru_cache(maxsize=None)
def _generators(n: int, two_mu: int) -> GeneratorSet:
    return GeneratorSet(n, two_mu)


def build_generators(cfg: ProblemConfig) -> GeneratorSet:
    return _generators(cfg.n, cfg.two_mu)


# ---------------------------------------------------------------------------
# comparison strategies

def compare(lhs: DiffOp, rhs: DiffOp, points, strategy: str = "auto"):
    """Yields (strategy, point_or_None, ok, residual) tuples."""
    if max(lhs.order, rhs.order) > MAX_ORDER:
        raise ValueError(f"operator of order {max(lhs.order, rhs.order)} exceeds {MAX_ORDER}: normal ordering bug")
    if strategy == "auto":
        strategy = NORMAL_FORM if lhs.in_radial_subring() and rhs.in_radial_subring() else POINTWISE
    if strategy == NORMAL_FORM:
        diff = lhs - rhs
        res = None
        if not diff.is_zero():
            beta = sorted(diff.terms)[0]
            res = {"beta": list(beta), "coefficient": [[str(v) for v in row] for row in diff.terms[beta]]}
        yield NORMAL_FORM, None, diff.is_zero(), res
        return
    for p in points:
        L, R = eval_op_at(lhs, p), eval_op_at(rhs, p)
        bad = None
        for beta in sorted(set(L) | set(R)):
            if L.get(beta) != R.get(beta):
                lv, rv = L.get(beta), R.get(beta)
                bad = {"beta": list(beta), "lhs": _mat_json(lv), "rhs": _mat_json(rv)}
                break
        yield POINTWISE, p, bad is None, bad


def _mat_json(m):
    if m is None:
        return None
    return [[str(v) for v in row] for row in m]


def _float_compare(lhs: DiffOp, rhs: DiffOp, pts) -> float:
    return float_residual(eval_op_float(lhs, pts), eval_op_float(rhs, pts))


def _emit(rep: VerificationReport, suite: str, ident: str, anchor: str, lhs, rhs, cfg, points,
          strategy="auto", fpts=None):
    with stopwatch() as sw:
        if cfg.mode == "float":
            res = _float_compare(lhs, rhs, fpts)
            results = [(FLOAT, None, res <= FLOAT_TOL, f"{res:.3e}")]
        else:
            results = list(compare(lhs, rhs, points, strategy))
    for strat, p, ok, res in results:
        label = ident if p is None else f"{ident}@p{points.index(p)}"
        rep.add(suite, label, anchor, strat, ok, witness=None if p is None else p.to_json(),
                residual=res, millis=sw[0])


def _label(A: int, B: int) -> str:
    return f"{A},{B}"


def _setup(cfg: ProblemConfig):
    gs = build_generators(cfg)
    points = random_points(gs.D, cfg.points, cfg.seed) if cfg.mode == "exact" else None
    fpts = _float_points(gs.D, FLOAT_POINTS, cfg.seed) if cfg.mode == "float" else None
    return gs, points, fpts


def closed_forms(gs: GeneratorSet) -> dict:
    """Label -> (definitional operator, closed form)."""
    ctx, D = gs.ctx, gs.D
    op, pi, g = gs.op, gs.pi, gs.gauge
    r, s = ctx.r, ctx.s
    c = ctx.const(gs.c)
    F = lambda a, b: DiffOp.multiplication(ctx, smat_scale(s, g.F[(a, b)]))
    xpi = DiffOp.zero(ctx, gs.dim)
    for al in range(1, D + 1):
        xpi = xpi + op(ctx.x(al)) * pi[al - 1]
    out = {}
    for al in range(1, D + 1):
        for be in range(al + 1, D + 1):
            cf = op(ctx.x(al)) * pi[be - 1] - op(ctx.x(be)) * pi[al - 1] + F(al, be)
            out[f"J[{al},{be}]"] = (gs.J(al, be), cf)
    for al in range(1, D + 1):
        xa = ctx.x(al)
        core = op(xa * Fraction(1, 2)) * gs.pi2 - pi[al - 1] * xpi
        for be in range(1, D + 1):
            if be != al:
                core = core + F(al, be) * pi[be - 1]
        core = core - op(c * xa * Fraction(1, 2) * s.inverse()) + pi[al - 1].scale(ctx.i * Fraction(D - 3, 2))
        out[f"A[{al}]"] = (gs.A_vec(al), core - op(xa * Fraction(1, 2)))
        out[f"M[{al}]"] = (gs.M_vec(al), core + op(xa * Fraction(1, 2)))
        out[f"W[{al}]"] = (gs.W(al), op(xa))
        out[f"Gamma[{al}]"] = (gs.Gamma[al - 1], op(r) * pi[al - 1])
    out["T"] = (gs.T, xpi - op(ctx.i * Fraction(D - 1, 2)))
    # sqrt(r)-sandwiched realizations: -Jhat_(alpha,0) = i sqrt(r) nabla sqrt(r), nabla = i pi
    half = Fraction(1, 2)
    sq = lambda P: op(r) * conjugate_sqrt_r(P)
    for al in range(1, D + 1):
        out[f"-Jhat[{al},0]"] = (-gs.J_hat(al, 0), sq(pi[al - 1]).scale(-1))
    lap = sq(gs.pi2).scale(-1)
    cr = op(c * r.inverse())
    out["-Jhat[D+1,0]"] = (-gs.J_hat(D + 1, 0), (lap + op(r) - cr).scale(half))
    out["-Jhat[-1,0]"] = (-gs.J_hat(-1, 0), (lap - op(r) - cr).scale(half))
    rpi2 = op(r) * gs.pi2 + op(c * r.inverse())
    out["Gamma[-1]"] = (gs.Gamma_m1, (rpi2 + op(r)).scale(Fraction(1, 2)))
    out["Gamma[D+1]"] = (gs.Gamma_D1, (rpi2 - op(r)).scale(Fraction(1, 2)))
    return out


def verify_closed_forms(cfg: ProblemConfig, strategy: str = "auto") -> VerificationReport:
    gs, points, fpts = _setup(cfg)
    rep = VerificationReport(cfg.echo())
    for name, (lhs, rhs) in closed_forms(gs).items():
        _emit(rep, "closed-forms", name, "closed-form generator list", lhs, rhs, cfg, points, strategy, fpts)
    return rep


def bracket_rhs(gs: GeneratorSet, A, B, A2, B2, J=None) -> DiffOp:
    """-i eta_AA' J_BB' - i eta_BB' J_AA' + i eta_AB' J_BA' + i eta_BA' J_AB'."""
    J = J or gs.J
    D, i = gs.D, gs.ctx.i
    out = DiffOp.zero(gs.ctx, gs.dim)
    for e, X, Y, sign in ((eta(A, A2, D), B, B2, -1), (eta(B, B2, D), A, A2, -1),
                          (eta(A, B2, D), B, A2, 1), (eta(B, A2, D), A, B2, 1)):
        if e:
            out = out + J(X, Y).scale(i * (sign * e))
    return out


def generator_pairs(gs: GeneratorSet) -> list:
    return list(combinations(gs.labels(), 2))


def select_pairs(gs: GeneratorSet, sample: int | None, seed: int) -> list:
    """All pairs, or (for large algebras) every pair whose operands have radial
    coefficients plus a seeded sample of the rest."""
    pairs = generator_pairs(gs)
    if sample is None:
        return pairs
    radial = [pq for pq in pairs if gs.J(*pq[0]).in_radial_subring() and gs.J(*pq[1]).in_radial_subring()]
    rest = [pq for pq in pairs if pq not in radial]
    picked = random.Random(seed).sample(rest, min(sample, len(rest)))
    return radial + sorted(picked)


def verify_commutation_relations(cfg: ProblemConfig, strategy: str = "auto", sample: int | None = None,
                                 hatted_sample: int = 12) -> VerificationReport:
    gs, points, fpts = _setup(cfg)
    if sample is None and cfg.n >= 3:
        sample = 60
    rep = VerificationReport(cfg.echo())
    anchor = "so(2,D+1) commutation relations"
    for (A, B), (A2, B2) in select_pairs(gs, sample, cfg.seed):
        lhs = commutator(gs.J(A, B), gs.J(A2, B2))
        rhs = bracket_rhs(gs, A, B, A2, B2)
        _emit(rep, "commutation", f"[J{_label(A, B)}, J{_label(A2, B2)}]", anchor, lhs, rhs, cfg, points,
              strategy, fpts)
    if hatted_sample:
        pairs = generator_pairs(gs)
        for (A, B), (A2, B2) in sorted(random.Random(cfg.seed + 1).sample(pairs, min(hatted_sample, len(pairs)))):
            lhs = commutator(gs.J_hat(A, B), gs.J_hat(A2, B2))
            rhs = bracket_rhs(gs, A, B, A2, B2, J=gs.J_hat)
            _emit(rep, "commutation", f"[Jhat{_label(A, B)}, Jhat{_label(A2, B2)}]",
                  anchor + " (sqrt(r)-conjugated generators)", lhs, rhs, cfg, points, strategy, fpts)
    return rep


def quadratic_sum(gs: GeneratorSet, B: int, C: int) -> DiffOp:
    out = DiffOp.zero(gs.ctx, gs.dim)
    for A in gs.indices:
        if A in (B, C):
            continue
        out = out + anticommutator(gs.J(A, B), gs.J(A, C)).scale(eta(A, A, gs.D))
    return out


def verify_quadratic_relations(cfg: ProblemConfig, strategy: str = "auto") -> VerificationReport:
    gs, points, fpts = _setup(cfg)
    rep = VerificationReport(cfg.echo())
    idx = gs.indices
    for bi, B in enumerate(idx):
        for C in idx[bi:]:
            lhs = quadratic_sum(gs, B, C)
            rhs = gs.op(gs.ctx.const(-2 * gs.a * eta(B, C, gs.D)))
            _emit(rep, "quadratic", f"sum_A eta^AA {{J[A,{B}], J[A,{C}]}}", "quadratic Casimir-type relation",
                  lhs, rhs, cfg, points, strategy, fpts)
    return rep
