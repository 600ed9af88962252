"""The coefficient field Q(i)(x_1..x_D)[r] / (r^2 - |x|^2).

Elements are stored as ``num / prod(base_j ** e_j)`` where ``num`` is a flint
polynomial in (R, I, x_1..x_D) of degree <= 1 in both R (standing for r) and
I (the imaginary unit), and every ``base_j`` is a monic irreducible polynomial
in x only, interned in the context.  Keeping the denominator factored means
products and sums never need a multivariate gcd: canonicalisation is trial
division by the few bases present.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

import flint
import numpy as np

from .exact import GaussianRational, QuadExtValue, RationalPoint


class DivisionByZeroExpr(ZeroDivisionError):
    pass


class PoleAtPoint(ZeroDivisionError):
    pass


def _fmpq(q) -> flint.fmpq:
    q = Fraction(q)
    return flint.fmpq(q.numerator, q.denominator)


def _frac(q: flint.fmpq) -> Fraction:
    return Fraction(int(q.p), int(q.q))


class ScalarContext:
    """Polynomial ring and base-factor registry for one dimension D."""

    def __init__(self, dim: int):
        if dim < 2:
            raise ValueError("dimension must be at least 2")
        self.dim = dim
        names = ("R", "I") + tuple(f"x{a}" for a in range(1, dim + 1))
        self.ring = flint.fmpq_mpoly_ctx.get(names, "lex")
        gens = self.ring.gens()
        self.R, self.I = gens[0], gens[1]
        self.xs = gens[2:]
        self.s_poly = sum((v * v for v in self.xs), self.ring.constant(0))
        self._rel_r = self.R * self.R - self.s_poly
        self._rel_i = self.I * self.I + 1
        self.bases: list = []
        self._base_index: dict[str, int] = {}
        self._base_deriv: dict[tuple[int, int], object] = {}
        self._base_pow: dict[tuple[int, int], object] = {}
        self._factor_cache: dict[str, tuple] = {}
        self.s_index = self._register(self.s_poly)
        self.zero = ScalarExpr(self, self.ring.constant(0), ())
        self.one = ScalarExpr(self, self.ring.constant(1), ())

    def __repr__(self):
        return f"ScalarContext(D={self.dim})"

    # -- registry -------------------------------------------------------
    def _register(self, poly) -> int:
        poly = poly / poly.leading_coefficient()
        key = str(poly)
        idx = self._base_index.get(key)
        if idx is None:
            idx = len(self.bases)
            self.bases.append(poly)
            self._base_index[key] = idx
        return idx

    def base_power(self, idx: int, k: int):
        if k == 0:
            return self.ring.constant(1)
        key = (idx, k)
        p = self._base_pow.get(key)
        if p is None:
            p = self.bases[idx] ** k
            self._base_pow[key] = p
        return p

    def base_derivative(self, idx: int, axis: int):
        key = (idx, axis)
        d = self._base_deriv.get(key)
        if d is None:
            d = self.bases[idx].derivative(axis + 2)
            self._base_deriv[key] = d
        return d

    def factor_denominator(self, poly) -> tuple[flint.fmpq, dict[int, int]]:
        """Split a nonzero x-polynomial into constant * prod(base^e)."""
        key = str(poly)
        hit = self._factor_cache.get(key)
        if hit is not None:
            return hit
        const, factors = poly.factor()
        exps: dict[int, int] = {}
        for f, e in factors:
            lc = f.leading_coefficient()
            const = const * lc ** e
            idx = self._register(f)
            exps[idx] = exps.get(idx, 0) + e
        out = (const, exps)
        self._factor_cache[key] = out
        return out

    # -- reductions -----------------------------------------------------
    def reduce(self, poly):
        degs = poly.degrees()
        if degs[0] >= 2:
            poly = divmod(poly, self._rel_r)[1]
        if degs[1] >= 2:
            poly = divmod(poly, self._rel_i)[1]
        return poly

    def make(self, num, den: dict[int, int]) -> "ScalarExpr":
        """Canonicalise num / prod(base^e) by cancelling every base that divides num."""
        if num.is_zero():
            return self.zero
        out = []
        for idx in sorted(den):
            e = den[idx]
            base = self.bases[idx]
            while e > 0:
                q, rem = divmod(num, base)
                if not rem.is_zero():
                    break
                num = q
                e -= 1
            if e:
                out.append((idx, e))
        return ScalarExpr(self, num, tuple(out))

    # -- constructors ---------------------------------------------------
    def const(self, value) -> "ScalarExpr":
        if isinstance(value, GaussianRational):
            num = self.ring.constant(_fmpq(value.re)) + _fmpq(value.im) * self.I
        else:
            num = self.ring.constant(_fmpq(value))
        return ScalarExpr(self, num, ()) if not num.is_zero() else self.zero

    def x(self, axis: int) -> "ScalarExpr":
        """Coordinate x_axis, 1-based."""
        return ScalarExpr(self, self.xs[axis - 1], ())

    @property
    def r(self) -> "ScalarExpr":
        return ScalarExpr(self, self.R, ())

    @property
    def i(self) -> "ScalarExpr":
        return ScalarExpr(self, self.I, ())

    @property
    def s(self) -> "ScalarExpr":
        return ScalarExpr(self, self.s_poly, ())

    def from_polys(self, num, den=None) -> "ScalarExpr":
        """Build num/den from arbitrary flint polynomials in (R, I, x)."""
        value = ScalarExpr(self, self.reduce(num), ()).renormalized()
        if den is None:
            return value
        return value * ScalarExpr(self, self.reduce(den), ()).renormalized().inverse()


@lru_cache(maxsize=None)
def context(dim: int) -> ScalarContext:
    return ScalarContext(dim)


class ScalarExpr:
    """Canonical element f + g*r of the coefficient field (Gaussian content allowed)."""

    __slots__ = ("ctx", "num", "den", "_hash")

    def __init__(self, ctx: ScalarContext, num, den: tuple):
        self.ctx = ctx
        self.num = num
        self.den = den
        self._hash = None

    # -- basic predicates ------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if not isinstance(other, ScalarExpr):
            try:
                other = self._lift(other)
            except TypeError:
                return NotImplemented
        return self.den == other.den and self.num == other.num

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((str(self.num), self.den))
        return self._hash

    def _lift(self, other) -> "ScalarExpr":
        if isinstance(other, ScalarExpr):
            if other.ctx is not self.ctx:
                raise ValueError("mixing scalar contexts of different dimension")
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return self.ctx.const(other)
        raise TypeError(f"cannot combine ScalarExpr with {type(other).__name__}")

    def den_poly(self):
        out = self.ctx.ring.constant(1)
        for idx, e in self.den:
            out = out * self.ctx.base_power(idx, e)
        return out

    def renormalized(self) -> "ScalarExpr":
        return self.ctx.make(self.ctx.reduce(self.num), dict(self.den))

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        ctx = self.ctx
        if self.den == other.den:
            return ctx.make(self.num + other.num, dict(self.den))
        d1, d2 = dict(self.den), dict(other.den)
        n1, n2 = self.num, other.num
        merged: dict[int, int] = {}
        trial: dict[int, int] = {}
        for idx in set(d1) | set(d2):
            e1, e2 = d1.get(idx, 0), d2.get(idx, 0)
            if e1 < e2:
                n1 = n1 * ctx.base_power(idx, e2 - e1)
            elif e2 < e1:
                n2 = n2 * ctx.base_power(idx, e1 - e2)
            merged[idx] = max(e1, e2)
            if e1 == e2:
                trial[idx] = e1
        num = n1 + n2
        if num.is_zero():
            return ctx.zero
        if trial:
            # only bases with equal exponents can cancel against a sum
            reduced = ctx.make(num, trial)
            kept = dict(reduced.den)
            out = dict(merged)
            for idx in trial:
                out[idx] = kept.get(idx, 0)
            return ScalarExpr(ctx, reduced.num,
                              tuple(sorted((k, v) for k, v in out.items() if v)))
        return ScalarExpr(ctx, num, tuple(sorted(merged.items())))

    __radd__ = __add__

    def __neg__(self):
        return ScalarExpr(self.ctx, -self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return self.ctx.zero
            return ScalarExpr(self.ctx, self.num * _fmpq(other), self.den)
        other = self._lift(other)
        if self.num.is_zero() or other.num.is_zero():
            return self.ctx.zero
        ctx = self.ctx
        num = ctx.reduce(self.num * other.num)
        if not self.den and not other.den:
            return ScalarExpr(ctx, num, ()) if not num.is_zero() else ctx.zero
        den = dict(self.den)
        for idx, e in other.den:
            den[idx] = den.get(idx, 0) + e
        return ctx.make(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "ScalarExpr":
        ctx = self.ctx
        if self.num.is_zero():
            raise DivisionByZeroExpr("inverse of zero")
        n = self.num
        gens = ctx.ring.gens()
        conj_r = n.compose(-gens[0], *gens[1:])
        m1 = ctx.reduce(n * conj_r)
        conj_i_m1 = m1.compose(gens[0], -gens[1], *gens[2:])
        m2 = ctx.reduce(m1 * conj_i_m1)
        if m2.is_zero():
            raise DivisionByZeroExpr("norm f^2 - g^2 |x|^2 vanishes identically")
        const, exps = ctx.factor_denominator(m2)
        num = ctx.reduce(conj_r * conj_i_m1) * self.den_poly() / const
        return ctx.make(num, exps)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroExpr("division by rational zero")
            return ScalarExpr(self.ctx, self.num / _fmpq(other), self.den)
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ctx.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- structure --------------------------------------------------------
    def split(self):
        """Return the four x-polynomials (A, B, C, D) with num = A + B R + C I + D R I."""
        ring = self.ctx.ring
        slots: list[dict] = [{}, {}, {}, {}]
        for monom, coeff in self.num.terms():
            slots[monom[0] + 2 * monom[1]][(0, 0) + tuple(monom[2:])] = coeff
        parts = [ring.from_dict(d) if d else ring.constant(0) for d in slots]
        return tuple(parts)

    def f_part(self) -> "ScalarExpr":
        A, B, C, D = self.split()
        return self.ctx.make(A + C * self.ctx.I, dict(self.den))

    def g_part(self) -> "ScalarExpr":
        A, B, C, D = self.split()
        return self.ctx.make(B + D * self.ctx.I, dict(self.den))

    def free_of_r(self) -> bool:
        return self.num.degrees()[0] == 0

    def denominator_bases(self) -> list:
        return [self.ctx.bases[idx] for idx, _ in self.den]

    def only_radial_denominator(self) -> bool:
        """True when the denominator is a power of |x|^2 (coefficients in Q(i)[x, r, 1/r])."""
        return all(idx == self.ctx.s_index for idx, _ in self.den)

    def conjugate(self) -> "ScalarExpr":
        """Complex conjugation (x and r real)."""
        gens = self.ctx.ring.gens()
        return ScalarExpr(self.ctx, self.num.compose(gens[0], -gens[1], *gens[2:]), self.den)

    def __repr__(self):
        if not self.den:
            return f"ScalarExpr({self.num})"
        den = " * ".join(f"({self.ctx.bases[i]})^{e}" for i, e in self.den)
        return f"ScalarExpr(({self.num}) / {den})"


def normalize(e, den=None) -> ScalarExpr:
    """Canonical form of a scalar expression.

    Accepts an already-built ScalarExpr (returned re-reduced, idempotently) or
    a pair of raw flint polynomials in (R, I, x) meaning ``e / den``.
    """
    if isinstance(e, ScalarExpr):
        if den is not None:
            return e / den
        return e.renormalized()
    raise TypeError("normalize expects a ScalarExpr; use ScalarContext.from_polys for raw polynomials")


def differentiate(e: ScalarExpr, axis: int) -> ScalarExpr:
    """Partial derivative d/dx_axis (1-based), using d r / d x_a = x_a r / |x|^2."""
    ctx = e.ctx
    if e.num.is_zero():
        return ctx.zero
    a = axis - 1
    n = e.num
    var = a + 2
    dn = n.derivative(var)
    dr = n.derivative(0)
    xa = ctx.xs[a]
    has_r = not dr.is_zero()
    if not e.den:
        if not has_r:
            return ScalarExpr(ctx, dn, ()) if not dn.is_zero() else ctx.zero
        return ctx.make(dn * ctx.s_poly + xa * ctx.R * dr, {ctx.s_index: 1})
    prod_p = ctx.ring.constant(1)
    acc = ctx.ring.constant(0)
    den: dict[int, int] = {}
    for idx, ex in e.den:
        den[idx] = ex + 1
    for j, (idx, ex) in enumerate(e.den):
        term = ex * ctx.base_derivative(idx, a)
        for k, (idx2, _) in enumerate(e.den):
            if k != j:
                term = term * ctx.bases[idx2]
        acc = acc + term
        prod_p = prod_p * ctx.bases[idx]
    if has_r:
        num = (dn * ctx.s_poly + xa * ctx.R * dr) * prod_p - ctx.s_poly * n * acc
        den[ctx.s_index] = den.get(ctx.s_index, 0) + 1
    else:
        num = dn * prod_p - n * acc
    return ctx.make(num, den)


def _eval_poly(poly, args) -> Fraction:
    return _frac(poly(*args))


def eval_exact(e: ScalarExpr, p: RationalPoint) -> QuadExtValue:
    """Exact value f(p) + g(p) sqrt(|p|^2)."""
    ctx = e.ctx
    if p.dim != ctx.dim:
        raise ValueError("point dimension does not match the scalar context")
    xs = [_fmpq(c) for c in p.coords]
    den = Fraction(1)
    for idx, ex in e.den:
        v = _eval_poly(ctx.bases[idx], [0, 0] + xs)
        if v == 0:
            raise PoleAtPoint(f"denominator {ctx.bases[idx]} vanishes at {p}")
        den *= v ** ex
    if e.num.is_zero():
        return QuadExtValue(0, 0, p.s)
    zero, one = flint.fmpq(0), flint.fmpq(1)
    n = e.num
    degs = n.degrees()
    a = _eval_poly(n, [zero, zero] + xs)
    b = _eval_poly(n, [one, zero] + xs) - a if degs[0] else Fraction(0)
    c = _eval_poly(n, [zero, one] + xs) - a if degs[1] else Fraction(0)
    d = (_eval_poly(n, [one, one] + xs) - a - b - c) if degs[0] and degs[1] else Fraction(0)
    return QuadExtValue(GaussianRational(a / den, c / den), GaussianRational(b / den, d / den), p.s)


def eval_float(e: ScalarExpr, pts: np.ndarray) -> np.ndarray:
    """Vectorised complex128 evaluation at an (npts, D) array of points."""
    pts = np.asarray(pts, dtype=float)
    num = _eval_poly_float(e.ctx, e.num, pts)
    den = np.ones(len(pts))
    for idx, ex in e.den:
        den = den * _eval_poly_float(e.ctx, e.ctx.bases[idx], pts).real ** ex
    return num / den


def _eval_poly_float(ctx: ScalarContext, poly, pts: np.ndarray) -> np.ndarray:
    terms = list(poly.terms())
    out = np.zeros(len(pts), dtype=complex)
    if not terms:
        return out
    exps = np.array([m for m, _ in terms], dtype=np.int64)
    coeffs = np.array([float(c.p) / float(c.q) for _, c in terms])
    r = np.sqrt(np.sum(pts * pts, axis=1))
    cols = np.concatenate([r[:, None].astype(complex), np.full((len(pts), 1), 1j), pts.astype(complex)], axis=1)
    # (npts, nterms): product over variables of value**exponent
    mons = np.ones((len(pts), len(terms)), dtype=complex)
    for v in range(cols.shape[1]):
        ev = exps[:, v]
        if ev.any():
            mons *= cols[:, v:v + 1] ** ev[None, :]
    return mons @ coeffs
