"""Normal-ordered differential operators with matrix coefficients in the scalar field."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Sequence

from .exact import GaussianRational, QuadExtValue, RationalPoint
from .scalar import ScalarContext, ScalarExpr, differentiate, eval_exact

MultiIndex = tuple


class DimMismatch(ValueError):
    pass


class NonPolynomialCoefficient(ValueError):
    pass


# ---------------------------------------------------------------------------
# matrices of ScalarExpr

def smat_zero(ctx: ScalarContext, dim: int):
    z = ctx.zero
    return tuple(tuple(z for _ in range(dim)) for _ in range(dim))


def smat_scalar(ctx: ScalarContext, dim: int, value) -> tuple:
    value = value if isinstance(value, ScalarExpr) else ctx.const(value)
    z = ctx.zero
    return tuple(tuple(value if i == j else z for j in range(dim)) for i in range(dim))


def smat_from_const(ctx: ScalarContext, m) -> tuple:
    return tuple(tuple(ctx.const(v) for v in row) for row in m)


def smat_is_zero(m) -> bool:
    return not any(v for row in m for v in row)


def smat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def smat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def smat_neg(a):
    return tuple(tuple(-x for x in row) for row in a)


def smat_scale(c, a):
    return tuple(tuple(x * c if x else x for x in row) for row in a)


def smat_mul(a, b):
    n = len(a)
    if n == 1:
        return ((a[0][0] * b[0][0],),)
    ctx = a[0][0].ctx
    out = []
    for i in range(n):
        ai = a[i]
        row = []
        for j in range(n):
            acc = None
            for t in range(n):
                x = ai[t]
                if not x:
                    continue
                y = b[t][j]
                if not y:
                    continue
                acc = x * y if acc is None else acc + x * y
            row.append(ctx.zero if acc is None else acc)
        out.append(tuple(row))
    return tuple(out)


def smat_diff(a, axis: int):
    return tuple(tuple(differentiate(x, axis) if x else x for x in row) for row in a)


def smat_eval(a, p: RationalPoint):
    return tuple(tuple(eval_exact(x, p) for x in row) for row in a)


# ---------------------------------------------------------------------------
# multi-indices

def unit(dim: int, axis: int) -> MultiIndex:
    """Multi-index e_axis (axis 1-based)."""
    return tuple(1 if k == axis - 1 else 0 for k in range(dim))


def madd(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x + y for x, y in zip(a, b))


def msub(a: MultiIndex, b: MultiIndex) -> MultiIndex:
    return tuple(x - y for x, y in zip(a, b))


def sub_indices(beta: MultiIndex):
    """All gamma <= beta componentwise, with the multinomial weight C(beta, gamma)."""
    for gamma in product(*(range(b + 1) for b in beta)):
        w = 1
        for b, g in zip(beta, gamma):
            w *= comb(b, g)
        yield gamma, w


# ---------------------------------------------------------------------------

class DiffOp:
    """sum_beta C_beta(x) d^beta with coefficients to the left of all derivatives."""

    __slots__ = ("ctx", "dim", "terms", "_dcache")

    def __init__(self, ctx: ScalarContext, dim: int, terms: dict | None = None):
        self.ctx = ctx
        self.dim = dim
        self.terms = {}
        for beta, m in (terms or {}).items():
            if not smat_is_zero(m):
                self.terms[tuple(beta)] = m
        self._dcache: dict = {}

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, ctx, dim):
        return cls(ctx, dim)

    @classmethod
    def identity(cls, ctx, dim):
        return cls.scalar(ctx, dim, ctx.one)

    @classmethod
    def scalar(cls, ctx, dim, value):
        return cls(ctx, dim, {(0,) * ctx.dim: smat_scalar(ctx, dim, value)})

    @classmethod
    def multiplication(cls, ctx, matrix):
        return cls(ctx, len(matrix), {(0,) * ctx.dim: matrix})

    @classmethod
    def partial(cls, ctx, dim, axis: int):
        return cls(ctx, dim, {unit(ctx.dim, axis): smat_scalar(ctx, dim, ctx.one)})

    @classmethod
    def laplacian(cls, ctx, dim):
        return cls(ctx, dim, {tuple(2 if k == a else 0 for k in range(ctx.dim)): smat_scalar(ctx, dim, ctx.one)
                              for a in range(ctx.dim)})

    # -- structure ---------------------------------------------------------
    @property
    def order(self) -> int:
        return max((sum(b) for b in self.terms), default=0)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, beta: MultiIndex):
        return self.terms.get(tuple(beta), smat_zero(self.ctx, self.dim))

    def coefficients(self) -> Iterable[ScalarExpr]:
        for m in self.terms.values():
            for row in m:
                for v in row:
                    if v:
                        yield v

    def in_radial_subring(self) -> bool:
        """True when every coefficient lies in Q(i)[x, r, 1/r]."""
        return all(v.only_radial_denominator() for v in self.coefficients())

    def __eq__(self, other):
        if not isinstance(other, DiffOp):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __repr__(self):
        parts = []
        for beta in sorted(self.terms):
            parts.append(f"{beta}: {self.terms[beta]}")
        return "DiffOp{" + "; ".join(parts) + "}"

    def _check(self, other: "DiffOp"):
        if not isinstance(other, DiffOp):
            raise TypeError("expected DiffOp")
        if other.dim != self.dim or other.ctx is not self.ctx:
            raise DimMismatch(f"operator sizes {self.dim} and {other.dim} differ")

    # -- linear structure --------------------------------------------------
    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for beta, m in other.terms.items():
            terms[beta] = smat_add(terms[beta], m) if beta in terms else m
        return DiffOp(self.ctx, self.dim, terms)

    def __neg__(self):
        return DiffOp(self.ctx, self.dim, {b: smat_neg(m) for b, m in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "DiffOp":
        """Multiply by a scalar (number, Gaussian rational or ScalarExpr) on the left."""
        if not isinstance(c, ScalarExpr):
            c = self.ctx.const(c)
        if not c:
            return DiffOp(self.ctx, self.dim)
        return DiffOp(self.ctx, self.dim, {b: smat_scale(c, m) for b, m in self.terms.items()})

    def left_matrix(self, matrix) -> "DiffOp":
        return DiffOp(self.ctx, self.dim, {b: smat_mul(matrix, m) for b, m in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, DiffOp):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    __matmul__ = __mul__

    # -- derivatives of coefficients (cached) ----------------------------------
    def coefficient_derivative(self, beta: MultiIndex, gamma: MultiIndex):
        """d^gamma applied to the coefficient matrix C_beta."""
        if not any(gamma):
            return self.terms[beta]
        key = (beta, gamma)
        hit = self._dcache.get(key)
        if hit is not None:
            return hit
        axis = max(k for k, g in enumerate(gamma) if g)
        prev = tuple(g - 1 if k == axis else g for k, g in enumerate(gamma))
        out = smat_diff(self.coefficient_derivative(beta, prev), axis + 1)
        self._dcache[key] = out
        return out


def compose(P: DiffOp, Q: DiffOp) -> DiffOp:
    """Normal-ordered product: C d^beta (D d^b') = sum_g C(beta,g) C (d^g D) d^(beta-g+b')."""
    P._check(Q)
    acc: dict = {}
    for beta, cp in P.terms.items():
        for gamma, w in sub_indices(beta):
            rest = msub(beta, gamma)
            for beta2 in Q.terms:
                dq = Q.coefficient_derivative(beta2, gamma)
                if smat_is_zero(dq):
                    continue
                prod_m = smat_mul(cp, dq)
                if w != 1:
                    prod_m = smat_scale(Fraction(w), prod_m)
                key = madd(rest, beta2)
                acc[key] = smat_add(acc[key], prod_m) if key in acc else prod_m
    return DiffOp(P.ctx, P.dim, acc)


def commutator(P: DiffOp, Q: DiffOp) -> DiffOp:
    return compose(P, Q) - compose(Q, P)


def anticommutator(P: DiffOp, Q: DiffOp) -> DiffOp:
    return compose(P, Q) + compose(Q, P)


def _sqrt_r_factors(ctx: ScalarContext):
    cache = getattr(ctx, "_sqrt_r_cache", None)
    if cache is None:
        cache = {(0,) * ctx.dim: ctx.one}
        ctx._sqrt_r_cache = cache
    return cache


def sqrt_r_derivative_factor(ctx: ScalarContext, gamma: MultiIndex) -> ScalarExpr:
    """u_gamma = r^(-1/2) d^gamma r^(1/2), an element of the scalar field."""
    cache = _sqrt_r_factors(ctx)
    hit = cache.get(gamma)
    if hit is not None:
        return hit
    axis = max(k for k, g in enumerate(gamma) if g)
    prev = tuple(g - 1 if k == axis else g for k, g in enumerate(gamma))
    u = sqrt_r_derivative_factor(ctx, prev)
    half_log = ctx.x(axis + 1) / (ctx.s * 2)
    out = differentiate(u, axis + 1) + u * half_log
    cache[gamma] = out
    return out


def conjugate_sqrt_r(P: DiffOp) -> DiffOp:
    """r^(-1/2) P r^(1/2) by Leibniz rewriting; the half powers cancel."""
    ctx = P.ctx
    acc: dict = {}
    for beta, cp in P.terms.items():
        for gamma, w in sub_indices(beta):
            u = sqrt_r_derivative_factor(ctx, gamma)
            if not u:
                continue
            m = smat_scale(u * w, cp)
            key = msub(beta, gamma)
            acc[key] = smat_add(acc[key], m) if key in acc else m
    return DiffOp(ctx, P.dim, acc)


def eval_op_at(P: DiffOp, p: RationalPoint) -> dict:
    """beta -> coefficient matrix evaluated at p (entries QuadExtValue); zero matrices dropped."""
    out = {}
    for beta, m in P.terms.items():
        val = smat_eval(m, p)
        if any(v for row in val for v in row):
            out[beta] = val
    return out


# ---------------------------------------------------------------------------
# sections

@dataclass(frozen=True)
class Section:
    """poly(x) * r^(m/2) * exp(-decay r) * spinor."""

    poly: ScalarExpr
    half_r_exponent: int
    decay: Fraction
    spinor: tuple

    def __post_init__(self):
        if self.poly.den or not self.poly.free_of_r():
            raise ValueError("section polynomial must be a polynomial in x")
        if Fraction(self.decay) < 0:
            raise ValueError("decay must be nonnegative")


class SectionSum:
    """Canonical form of a finite sum of sections sharing one decay rate:
    sum over parity eps in {0, 1} of r^(eps/2) exp(-decay r) * (vector of field elements)."""

    __slots__ = ("ctx", "dim", "decay", "parts")

    def __init__(self, ctx, dim, decay, parts: dict):
        self.ctx, self.dim, self.decay = ctx, dim, Fraction(decay)
        self.parts = {eps: tuple(v) for eps, v in parts.items() if any(x for x in v)}

    @classmethod
    def from_sections(cls, sections: Sequence[Section], ctx=None, dim=None, decay=None):
        sections = list(sections)
        if sections:
            ctx = sections[0].poly.ctx
            dim = len(sections[0].spinor)
            decay = sections[0].decay
        parts: dict = {}
        for sec in sections:
            if Fraction(sec.decay) != Fraction(decay):
                raise ValueError("sections with different decay rates cannot be merged")
            eps = sec.half_r_exponent % 2
            k = (sec.half_r_exponent - eps) // 2
            factor = sec.poly * (ctx.r ** k)
            vec = parts.get(eps, tuple(ctx.zero for _ in range(dim)))
            parts[eps] = tuple(v + factor * ctx.const(c) if c else v for v, c in zip(vec, sec.spinor))
        return cls(ctx, dim, decay, parts)

    def __add__(self, other):
        parts = dict(self.parts)
        for eps, vec in other.parts.items():
            parts[eps] = tuple(a + b for a, b in zip(parts[eps], vec)) if eps in parts else vec
        return SectionSum(self.ctx, self.dim, self.decay, parts)

    def scale(self, c):
        c = c if isinstance(c, ScalarExpr) else self.ctx.const(c)
        return SectionSum(self.ctx, self.dim, self.decay, {e: tuple(c * x for x in v) for e, v in self.parts.items()})

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return not self.parts

    def __eq__(self, other):
        if not isinstance(other, SectionSum):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def derivative(self, axis: int) -> "SectionSum":
        ctx = self.ctx
        xa = ctx.x(axis)
        out = {}
        for eps, vec in self.parts.items():
            # d[r^(eps/2) e^(-l r)] = r^(eps/2) e^(-l r) (eps x_a / (2 s) - l x_a r / s)
            log_d = xa * (Fraction(eps, 2) - ctx.r * self.decay) / ctx.s
            out[eps] = tuple(differentiate(v, axis) + v * log_d for v in vec)
        return SectionSum(ctx, self.dim, self.decay, out)

    def to_sections(self) -> list[Section]:
        ctx = self.ctx
        out = []
        for eps in sorted(self.parts):
            for j, v in enumerate(self.parts[eps]):
                if not v:
                    continue
                if not v.only_radial_denominator():
                    raise NonPolynomialCoefficient("section component has a non-radial denominator")
                spinor = tuple(1 if k == j else 0 for k in range(self.dim))
                for part, shift in ((v.f_part(), 0), (v.g_part(), 2)):
                    if not part:
                        continue
                    a = sum(e for _, e in part.den)
                    poly = ScalarExpr(ctx, part.num, ())
                    out.append(Section(poly, eps - 4 * a + shift, self.decay, spinor))
        return out

    def jet_at(self, p: RationalPoint, order: int) -> dict:
        """beta -> vector of exact values of d^beta(self) / (r^(eps/2) e^(-l r)) at p,
        one entry per parity class."""
        D = self.ctx.dim
        out = {}
        frontier = {(0,) * D: self}
        for beta in sorted(_indices_upto(D, order), key=sum):
            if beta not in frontier:
                axis = max(k for k, b in enumerate(beta) if b)
                prev = tuple(b - 1 if k == axis else b for k, b in enumerate(beta))
                frontier[beta] = frontier[prev].derivative(axis + 1)
            cur = frontier[beta]
            out[beta] = {eps: tuple(eval_exact(v, p) for v in vec) for eps, vec in cur.parts.items()}
        return out


def _indices_upto(D: int, order: int):
    for beta in product(range(order + 1), repeat=D):
        if sum(beta) <= order:
            yield beta


def _check_polynomial(P: DiffOp):
    for v in P.coefficients():
        if not v.only_radial_denominator():
            raise NonPolynomialCoefficient(
                "operator coefficient has a denominator other than a power of |x|^2; compare it pointwise instead")


def apply_sum(P: DiffOp, section: SectionSum) -> SectionSum:
    _check_polynomial(P)
    if section.dim != P.dim:
        raise DimMismatch("spinor length does not match operator size")
    derivs = {(0,) * P.ctx.dim: section}

    def deriv(beta):
        hit = derivs.get(beta)
        if hit is None:
            axis = max(k for k, b in enumerate(beta) if b)
            prev = tuple(b - 1 if k == axis else b for k, b in enumerate(beta))
            hit = deriv(prev).derivative(axis + 1)
            derivs[beta] = hit
        return hit

    ctx = P.ctx
    acc = SectionSum(ctx, P.dim, section.decay, {})
    for beta, m in P.terms.items():
        ds = deriv(beta)
        parts = {}
        for eps, vec in ds.parts.items():
            parts[eps] = tuple(
                _dot(m[i], vec, ctx) for i in range(P.dim))
        acc = acc + SectionSum(ctx, P.dim, section.decay, parts)
    return acc


def _dot(row, vec, ctx):
    acc = ctx.zero
    for a, b in zip(row, vec):
        if a and b:
            acc = acc + a * b
    return acc


def apply(P: DiffOp, s: Section | Sequence[Section]) -> list[Section]:
    """Exact image of a section (or formal sum of sections) under P, as merged sections."""
    sections = [s] if isinstance(s, Section) else list(s)
    if not sections:
        return []
    total = SectionSum.from_sections(sections)
    return apply_sum(P, total).to_sections()


def eval_op_float(P: DiffOp, pts) -> dict:
    """beta -> complex array (npts, dim, dim) of coefficient values at float points."""
    import numpy as np
    from .scalar import eval_float

    pts = np.asarray(pts, dtype=float)
    out = {}
    for beta, m in P.terms.items():
        arr = np.zeros((len(pts), P.dim, P.dim), dtype=complex)
        for i, row in enumerate(m):
            for j, v in enumerate(row):
                if v:
                    arr[:, i, j] = eval_float(v, pts)
        out[beta] = arr
    return out


def float_residual(lhs: dict, rhs: dict) -> float:
    """max |L - R| / max(|L|, |R|) over all coefficient arrays (0 when both vanish)."""
    import numpy as np

    num, scale = 0.0, 0.0
    for beta in set(lhs) | set(rhs):
        a = lhs.get(beta)
        b = rhs.get(beta)
        if a is None:
            a = np.zeros_like(b)
        if b is None:
            b = np.zeros_like(a)
        num = max(num, float(np.max(np.abs(a - b))))
        scale = max(scale, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    if scale == 0.0:
        return 0.0
    return num / scale
