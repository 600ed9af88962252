"""Radial sector: spectrum, Laguerre eigenfunctions, twist map, ladder and Gram checks.

A radial function is sqrt(scale2) * q(r) * r^(s/2) * exp(-decay r) with q a
polynomial over Q(i).  Inner products use the measure r^(2n-1) dr and come
back as exact elements of Q(i)(sqrt t).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import numpy as np

from .exact import GaussianRational, QuadExtValue, rational_sqrt
from .report import FLOAT, NORMAL_FORM, VerificationReport, stopwatch

G = GaussianRational
GL_NODES = 64
GRAM_TOL = 1e-10


def _clean(poly: dict) -> dict:
    return {j: G.coerce(c) for j, c in poly.items() if c}


def _padd(a: dict, b: dict) -> dict:
    out = dict(a)
    for j, c in b.items():
        out[j] = out.get(j, G()) + c
    return _clean(out)


def _pscale(c, a: dict) -> dict:
    c = G.coerce(c)
    return _clean({j: c * v for j, v in a.items()})


def _pmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, G()) + x * y
    return _clean(out)


def _pshift(a: dict, k: int) -> dict:
    return {j + k: c for j, c in a.items()}


def _pderiv(a: dict) -> dict:
    return _clean({j - 1: c * j for j, c in a.items() if j})


# ---------------------------------------------------------------------------
# labels, energies, Laguerre polynomials

@dataclass(frozen=True)
class SpectralLabel:
    k: int
    l: int
    n: int
    two_mu: int

    def __post_init__(self):
        if self.k < 1 or self.l < 0:
            raise ValueError("need k >= 1 and l >= 0")
        if self.two_mu not in (0, 1):
            raise ValueError("radial sectors exist for mu in {0, 1/2}")

    @property
    def mu(self) -> Fraction:
        return Fraction(self.two_mu, 2)

    @property
    def l_mu(self) -> Fraction:
        return self.l + self.mu + self.n - Fraction(3, 2)

    @property
    def I(self) -> int:
        return self.k + self.l - 1

    @property
    def nu(self) -> Fraction:
        return self.k + self.l_mu

    @property
    def alpha(self) -> int:
        a = 2 * self.l_mu + 1
        assert a.denominator == 1
        return int(a)

    @property
    def energy(self) -> Fraction:
        return energy(self.I, self.n, self.mu)


def energy(I: int, n: int, mu) -> Fraction:
    if I < 0:
        raise ValueError("I must be nonnegative")
    return Fraction(-1, 2) / (I + n + Fraction(mu) - Fraction(1, 2)) ** 2


@lru_cache(maxsize=None)
def laguerre_poly(m: int, alpha: int) -> tuple:
    """Coefficients (ascending) of L^alpha_m by the three-term recurrence."""
    if m < 0 or alpha < 0:
        raise ValueError("degree and parameter must be nonnegative")
    prev, cur = [Fraction(1)], [Fraction(alpha + 1), Fraction(-1)]
    if m == 0:
        return tuple(prev)
    for j in range(1, m):
        # (j+1) L_{j+1} = (2j + 1 + alpha - t) L_j - (j + alpha) L_{j-1}
        nxt = [Fraction(0)] * (j + 2)
        for i, c in enumerate(cur):
            nxt[i] += (2 * j + 1 + alpha) * c
            nxt[i + 1] -= c
        for i, c in enumerate(prev):
            nxt[i] -= (j + alpha) * c
        prev, cur = cur, [c / (j + 1) for c in nxt]
    return tuple(cur)


def laguerre_closed_form(m: int, alpha: int) -> tuple:
    """sum_j (-1)^j C(m+alpha, m-j) t^j / j!"""
    return tuple(Fraction((-1) ** j * comb(m + alpha, m - j), factorial(j)) for j in range(m + 1))


# ---------------------------------------------------------------------------
# radial functions

@dataclass(frozen=True)
class RadialFunction:
    """sqrt(scale2) * poly(r) * r^(half_exponent/2) * exp(-decay r)."""

    poly: tuple  # sorted ((power, GaussianRational), ...), powers >= 0
    half_exponent: int
    decay: Fraction
    scale2: Fraction = Fraction(1)

    @classmethod
    def make(cls, poly: dict, half_exponent: int, decay, scale2=1) -> "RadialFunction":
        poly = _clean(poly)
        scale2 = Fraction(scale2)
        if not poly or scale2 == 0:
            return cls((), 0, Fraction(decay), Fraction(0))
        low = min(poly)
        poly = _pshift(poly, -low)
        half_exponent += 2 * low
        # pull the square part of scale2 into the coefficients
        root, scale2 = _split_square(scale2)
        if root != 1:
            poly = _pscale(root, poly)
        return cls(tuple(sorted(poly.items())), half_exponent, Fraction(decay), scale2)

    @property
    def coeffs(self) -> dict:
        return dict(self.poly)

    def is_zero(self) -> bool:
        return not self.poly

    def scale(self, c) -> "RadialFunction":
        return RadialFunction.make(_pscale(c, self.coeffs), self.half_exponent, self.decay, self.scale2)

    def scale_sqrt(self, q) -> "RadialFunction":
        """Multiply by sqrt(q), q a nonnegative rational."""
        return RadialFunction.make(self.coeffs, self.half_exponent, self.decay, self.scale2 * Fraction(q))

    def _aligned(self, other: "RadialFunction"):
        if self.decay != other.decay or (self.half_exponent - other.half_exponent) % 2:
            raise ValueError("functions are not in the same class")
        if self.scale2 != other.scale2:
            raise ValueError("functions carry different square-root factors")

    def __add__(self, other: "RadialFunction") -> "RadialFunction":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        self._aligned(other)
        base = min(self.half_exponent, other.half_exponent)
        a = _pshift(self.coeffs, (self.half_exponent - base) // 2)
        b = _pshift(other.coeffs, (other.half_exponent - base) // 2)
        return RadialFunction.make(_padd(a, b), base, self.decay, self.scale2)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, RadialFunction):
            return NotImplemented
        return (self.poly, self.half_exponent, self.decay, self.scale2) == (
            other.poly, other.half_exponent, other.decay, other.scale2) or (
            self.is_zero() and other.is_zero())

    def __hash__(self):
        return hash((self.poly, self.half_exponent, self.decay, self.scale2))

    def derivative(self) -> "RadialFunction":
        # d/dr [q r^(s/2) e^(-l r)] = (q' + (s/2) q / r - l q) r^(s/2) e^(-l r)
        q = self.coeffs
        s = self.half_exponent
        out = _padd(_pshift(_pderiv(q), 1), _pscale(Fraction(s, 2), q))
        out = _padd(out, _pscale(-self.decay, _pshift(q, 1)))
        return RadialFunction.make(out, s - 2, self.decay, self.scale2)

    def times_power(self, k: int) -> "RadialFunction":
        """Multiply by r^k."""
        return RadialFunction.make(self.coeffs, self.half_exponent + 2 * k, self.decay, self.scale2)

    def dilate(self, nu) -> "RadialFunction":
        """r -> nu r."""
        nu = Fraction(nu)
        poly = {j: c * nu ** j for j, c in self.coeffs.items()}
        scale2 = self.scale2 * nu ** self.half_exponent
        return RadialFunction.make(poly, self.half_exponent, self.decay * nu, scale2)

    def conjugate(self) -> "RadialFunction":
        return RadialFunction(tuple((j, c.conjugate()) for j, c in self.poly), self.half_exponent,
                              self.decay, self.scale2)

    def __call__(self, r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        val = np.zeros_like(r, dtype=complex)
        for j, c in self.poly:
            val = val + complex(c) * r ** j
        return np.sqrt(float(self.scale2)) * val * r ** (self.half_exponent / 2) * np.exp(-float(self.decay) * r)

    def to_json(self):
        return {"poly": {str(j): str(c) for j, c in self.poly}, "half_exponent": self.half_exponent,
                "decay": str(self.decay), "sqrt_factor": str(self.scale2)}


def _split_square(q: Fraction) -> tuple[Fraction, Fraction]:
    """q = root^2 * rest with rest a squarefree integer when the cofactor left
    after trial division is squarefree (always the case for our inputs)."""
    root = rational_sqrt(q)
    if root is not None:
        return root, Fraction(1)
    m = q.numerator * q.denominator
    out = Fraction(1, q.denominator)
    p = 2
    while p * p <= m and p < 10000:
        while m % (p * p) == 0:
            m //= p * p
            out *= p
        p += 1
    return out, Fraction(m)


def _moment(m: int, beta: Fraction) -> Fraction:
    """int_0^inf r^m exp(-beta r) dr."""
    if m < 0:
        raise ValueError("divergent radial integral")
    return Fraction(factorial(m)) / beta ** (m + 1)


def inner(f: RadialFunction, g: RadialFunction, n: int) -> QuadExtValue:
    """<f, g> = int conj(f) g r^(2n-1) dr, exact."""
    if f.is_zero() or g.is_zero():
        return QuadExtValue(0, 0, 1)
    total = G()
    base = f.half_exponent + g.half_exponent
    if base % 2:
        raise ValueError("half-integer total power: integral is not a rational moment")
    beta = f.decay + g.decay
    for i, a in f.poly:
        for j, b in g.poly:
            total = total + a.conjugate() * b * _moment(i + j + base // 2 + 2 * n - 1, beta)
    return QuadExtValue(0, total, f.scale2 * g.scale2)


def proportional(f: RadialFunction, g: RadialFunction):
    """The exact multiple m with f = m g, or None.  g must be nonzero."""
    if f.is_zero():
        return QuadExtValue(0, 0, 1)
    if f.decay != g.decay or f.half_exponent != g.half_exponent or len(f.poly) != len(g.poly):
        return None
    top_f, top_g = f.poly[-1], g.poly[-1]
    if top_f[0] != top_g[0]:
        return None
    ratio = top_f[1] / top_g[1]
    for (i, a), (j, b) in zip(f.poly, g.poly):
        if i != j or a != ratio * b:
            return None
    # f = sqrt(f.scale2) P, g = sqrt(g.scale2) Q, P = ratio Q
    return QuadExtValue(0, ratio, f.scale2 / g.scale2)


# ---------------------------------------------------------------------------
# radial operators: sum_j c_j(r) (d/dr)^j with Laurent coefficients

class RadialOp:
    __slots__ = ("terms",)

    def __init__(self, terms: dict):
        self.terms = {j: _clean(c) for j, c in terms.items() if _clean(c)}

    @classmethod
    def mult(cls, laurent: dict) -> "RadialOp":
        return cls({0: laurent})

    @classmethod
    def d(cls) -> "RadialOp":
        return cls({1: {0: G(1)}})

    def __add__(self, other):
        out = dict(self.terms)
        for j, c in other.terms.items():
            out[j] = _padd(out.get(j, {}), c)
        return RadialOp(out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return RadialOp({j: _pscale(c, v) for j, v in self.terms.items()})

    def __mul__(self, other: "RadialOp") -> "RadialOp":
        # (c d^j)(e d^k) = sum_t C(j,t) c (d^t e) d^(j-t+k)
        out: dict = {}
        for j, c in self.terms.items():
            for k, e in other.terms.items():
                de = e
                for t in range(j + 1):
                    if t:
                        de = _pderiv(de)
                    if not de:
                        break
                    term = _pscale(comb(j, t), _pmul(c, de))
                    key = j - t + k
                    out[key] = _padd(out.get(key, {}), term)
        return RadialOp(out)

    def __eq__(self, other):
        return isinstance(other, RadialOp) and (self - other).terms == {}

    __hash__ = None

    def apply(self, f: RadialFunction) -> RadialFunction:
        out = RadialFunction.make({}, 0, f.decay)
        cur = f
        for j in range(max(self.terms, default=-1) + 1):
            if j:
                cur = cur.derivative()
            c = self.terms.get(j)
            if not c or cur.is_zero():
                continue
            for power, coef in c.items():
                out = out + cur.times_power(power).scale(coef)
        return out

    def twisted(self) -> "RadialOp":
        """r^(-1/2) o self o r^(1/2): d -> d + 1/(2r)."""
        dh = RadialOp({1: {0: G(1)}, 0: {-1: G(Fraction(1, 2))}})
        out = RadialOp({})
        for j, c in self.terms.items():
            p = RadialOp({0: {0: G(1)}})
            for _ in range(j):
                p = p * dh
            out = out + RadialOp.mult(c) * p
        return out

    def to_json(self):
        return {str(j): {str(p): str(c) for p, c in sorted(v.items())} for j, v in sorted(self.terms.items())}


def centrifugal(label: SpectralLabel) -> Fraction:
    n = label.n
    return label.l_mu * (label.l_mu + 1) - (n - Fraction(1, 2)) * (n - Fraction(3, 2))


def _laplace_part(n: int, kappa: Fraction) -> RadialOp:
    """-d^2 - (2n-1)/r d + kappa/r^2."""
    return RadialOp({2: {0: G(-1)}, 1: {-1: G(-(2 * n - 1))}, 0: {-2: G(kappa)}})


def radial_operator(name: str, l: int, n: int, two_mu: int, twisted: bool = False) -> RadialOp:
    lab = SpectralLabel(1, l, n, two_mu)
    kappa = centrifugal(lab)
    c = (n - 1) * lab.mu
    half = Fraction(1, 2)
    if name == "H":
        op = _laplace_part(n, kappa).scale(half) + RadialOp.mult({-1: G(-1)})
    elif name in ("Gamma-1", "GammaD+1"):
        # r pi^2 + c/r = r (pi^2 + c/r^2) = 2 r (H + 1/r)
        H = radial_operator("H", l, n, two_mu)
        rX = RadialOp.mult({1: G(2)}) * (H + RadialOp.mult({-1: G(1)}))
        sign = 1 if name == "Gamma-1" else -1
        op = (rX + RadialOp.mult({1: G(sign)})).scale(half)
    elif name == "T":
        # x.pi on the radial sector is -i r d
        op = RadialOp({1: {1: G(0, -1)}, 0: {0: G(0, -(n - half))}})
    else:
        raise ValueError(f"unknown radial operator {name!r}")
    return op.twisted() if twisted else op


def radial_operator_direct(name: str, l: int, n: int, two_mu: int) -> RadialOp:
    """Gamma_{-1}, Gamma_{D+1} as (1/2)(r pi^2 +- r + c/r) with pi^2 from the angular sector."""
    lab = SpectralLabel(1, l, n, two_mu)
    kappa = centrifugal(lab)
    c = (n - 1) * lab.mu
    pi2 = _laplace_part(n, kappa - c)
    sign = 1 if name == "Gamma-1" else -1
    op = RadialOp.mult({1: G(1)}) * pi2 + RadialOp.mult({1: G(sign), -1: G(c)})
    return op.scale(Fraction(1, 2))


# ---------------------------------------------------------------------------
# eigenfunctions and the twist map

def _normalized(f: RadialFunction, n: int) -> RadialFunction:
    nrm = inner(f, f, n)
    # f has no radical factor yet, so the norm is a positive rational
    assert not nrm.b and nrm.a.im == 0 and nrm.a.re > 0
    value = nrm.a.re
    return f.scale_sqrt(1 / value)


def radial_eigenfunction(label: SpectralLabel, twisted: bool = False) -> RadialFunction:
    L = laguerre_poly(label.k - 1, label.alpha)
    two_lm = 2 * (label.l + label.mu)  # integer
    if twisted:
        poly = {j: G(c * 2 ** j) for j, c in enumerate(L)}
        f = RadialFunction.make(poly, int(two_lm) - 1, Fraction(1))
    else:
        nu = label.nu
        poly = {j: G(c * (2 / nu) ** j) for j, c in enumerate(L)}
        f = RadialFunction.make(poly, int(two_lm), 1 / nu)
    return _normalized(f, label.n)


def twist_map(label: SpectralLabel) -> RadialFunction:
    """nu^(n+1/2) R(nu r) / sqrt(r) with nu = k + l_mu."""
    nu = label.nu
    R = radial_eigenfunction(label, twisted=False)
    out = R.dilate(nu).scale_sqrt(nu ** (2 * label.n + 1))
    return RadialFunction.make(out.coeffs, out.half_exponent - 1, out.decay, out.scale2)


# ---------------------------------------------------------------------------
# suites

ANCHOR_H = "radial Schrodinger equation"
ANCHOR_G = "Gamma_-1 eigenvalue equation on twisted states"
ANCHOR_LADDER = "ladder action of T +- i Gamma_D+1 on twisted states"
ANCHOR_GRAM = "orthonormality of twisted radial states"
ANCHOR_SYM = "hermiticity of twisted generators on the radial sector"
ANCHOR_TWIST = "twist map preserves the L2 norm"


def _is_value(q: QuadExtValue, target) -> bool:
    return (q - QuadExtValue(target, 0, q.s)).is_zero()


def verify_radial_eigensystem(n: int, two_mu: int, kmax: int = 4, lmax: int = 4) -> VerificationReport:
    rep = VerificationReport({"n": n, "mu": str(Fraction(two_mu, 2)), "kmax": kmax, "lmax": lmax})
    add = rep.add
    add("radial", "laguerre-closed-form", "generalized Laguerre polynomials", NORMAL_FORM,
        all(laguerre_poly(m, a) == laguerre_closed_form(m, a) for m in range(kmax + 1) for a in range(2 * (lmax + n) + 2)))
    for l in range(lmax + 1):
        H = radial_operator("H", l, n, two_mu)
        Gm = radial_operator("Gamma-1", l, n, two_mu, twisted=True)
        Gp = radial_operator("GammaD+1", l, n, two_mu, twisted=True)
        That = radial_operator("T", l, n, two_mu, twisted=True)
        for name in ("Gamma-1", "GammaD+1"):
            ok = radial_operator(name, l, n, two_mu) == radial_operator_direct(name, l, n, two_mu)
            add("radial", f"assembly {name} l={l}", "closed forms restricted to the sector l", NORMAL_FORM, ok)
        ok = That == RadialOp({1: {1: G(0, -1)}, 0: {0: G(0, -n)}})
        add("radial", f"T-hat l={l}", "T = x.pi - i(D-1)/2, conjugated by sqrt(r)", NORMAL_FORM, ok)
        i = G(0, 1)
        down_op = That + Gp.scale(i)
        up_op = That - Gp.scale(i)
        states = {}
        for k in range(1, kmax + 2):
            states[k] = radial_eigenfunction(SpectralLabel(k, l, n, two_mu), twisted=True)
        for k in range(1, kmax + 1):
            lab = SpectralLabel(k, l, n, two_mu)
            tag = f"k={k} l={l}"
            with stopwatch() as sw:
                R = radial_eigenfunction(lab)
                lhs = H.apply(R)
                ok = (lhs - R.scale(lab.energy)).is_zero()
            add("radial", f"(a) H R {tag}", ANCHOR_H, NORMAL_FORM, ok,
                witness={"E": str(lab.energy)}, residual=None if ok else lhs.to_json(), millis=sw[0])
            psi = states[k]
            img = Gm.apply(psi)
            ok = (img - psi.scale(lab.nu)).is_zero()
            add("radial", f"(b) Gamma-1 psi {tag}", ANCHOR_G, NORMAL_FORM, ok,
                witness={"eigenvalue": str(lab.nu)}, residual=None if ok else img.to_json())
            # ladder: T + i Gamma_D+1 lowers k, T - i Gamma_D+1 raises it
            for op, target, tag2 in ((down_op, k - 1, "+"), (up_op, k + 1, "-")):
                img = op.apply(psi)
                if target == 0:
                    ok, mult = img.is_zero(), "0"
                else:
                    m = proportional(img, states[target])
                    ok, mult = m is not None, (str(m) if m is not None else None)
                add("radial", f"(c) (T{tag2}iGamma) psi {tag} -> k={target}", ANCHOR_LADDER, NORMAL_FORM, ok,
                    witness={"multiple": mult})
            # twist map
            tw = twist_map(lab)
            ok = tw == psi and _is_value(inner(tw, tw, n), 1) and _is_value(inner(R, R, n), 1)
            add("radial", f"twist {tag}", ANCHOR_TWIST, NORMAL_FORM, ok,
                witness={"half_exponent": tw.half_exponent, "decay": str(tw.decay)})
        # Gram and symmetry
        ks = range(1, kmax + 1)
        gram_ok = all(_is_value(inner(states[a], states[b], n), 1 if a == b else 0) for a in ks for b in ks)
        add("radial", f"(d) Gram l={l}", ANCHOR_GRAM, NORMAL_FORM, gram_ok)
        for name, op in (("Gamma-1", Gm), ("GammaD+1", Gp), ("T", That)):
            ok = all((inner(states[a], op.apply(states[b]), n) - inner(op.apply(states[a]), states[b], n)).is_zero()
                     for a in ks for b in ks)
            add("radial", f"(e) symmetric {name} l={l}", ANCHOR_SYM, NORMAL_FORM, ok)
    # spacing of Gamma_-1 eigenvalues and degeneracy bookkeeping
    for I in range(kmax + lmax):
        sectors = [(k, I + 1 - k) for k in range(1, I + 2)]
        add("radial", f"sectors I={I}", "energy level I splits into I+1 radial sectors", NORMAL_FORM,
            len(sectors) == I + 1 and all(SpectralLabel(k, l, n, two_mu).I == I for k, l in sectors))
    return rep


def gauss_laguerre_gram(n: int, two_mu: int, l: int, kmax: int) -> np.ndarray:
    """Gram matrix of twisted states by 64-node Gauss-Laguerre quadrature in t = 2r."""
    t, w = np.polynomial.laguerre.laggauss(GL_NODES)
    r = t / 2
    vals = []
    for k in range(1, kmax + 1):
        f = radial_eigenfunction(SpectralLabel(k, l, n, two_mu), twisted=True)
        # drop exp(-r): the two exponentials make up the Laguerre weight
        vals.append(RadialFunction.make(f.coeffs, f.half_exponent, 0, f.scale2)(r))
    V = np.array(vals)
    weight = w * r ** (2 * n - 1) / 2
    return (V.conj() * weight) @ V.T


def verify_gram_float(n: int, two_mu: int, kmax: int = 4, lmax: int = 4) -> VerificationReport:
    rep = VerificationReport({"n": n, "mu": str(Fraction(two_mu, 2)), "kmax": kmax, "lmax": lmax})
    for l in range(lmax + 1):
        exact = np.array([[complex(inner(radial_eigenfunction(SpectralLabel(a, l, n, two_mu), True),
                                         radial_eigenfunction(SpectralLabel(b, l, n, two_mu), True), n))
                           for b in range(1, kmax + 1)] for a in range(1, kmax + 1)])
        err = float(np.max(np.abs(gauss_laguerre_gram(n, two_mu, l, kmax) - exact)))
        rep.add("radial", f"Gauss-Laguerre Gram l={l}", ANCHOR_GRAM, FLOAT, err <= GRAM_TOL,
                witness={"nodes": GL_NODES}, residual=f"{err:.3e}")
    return rep


# ---------------------------------------------------------------------------
# the genuine D-dimensional operator on scalar (mu = 0) states

def twisted_scalar_state(k: int, l: int, n: int):
    """(x1 + i x2)^l r^(-1/2) L(2r) e^(-r), unnormalized, as a list of sections."""
    from .diffop import Section
    from .scalar import context

    ctx = context(2 * n)
    h = (ctx.x(1) + ctx.i * ctx.x(2)) ** l
    lab = SpectralLabel(k, l, n, 0)
    out = []
    for j, c in enumerate(laguerre_poly(k - 1, lab.alpha)):
        if c:
            out.append(Section(h * (c * 2 ** j), 2 * j - 1, Fraction(1), (1,)))
    return out


def full_dimension_scalar_check(n: int = 2, kmax: int = 3, lmax: int = 3) -> VerificationReport:
    from .diffop import DiffOp, SectionSum, apply_sum, conjugate_sqrt_r
    from .micz import _generators

    rep = VerificationReport({"n": n, "mu": "0", "kmax": kmax, "lmax": lmax})
    gs = _generators(n, 0)
    ctx = gs.ctx
    G_hat = gs.J_hat(-1, 0)
    for l in range(lmax + 1):
        h = (ctx.x(1) + ctx.i * ctx.x(2)) ** l
        lap = DiffOp.laplacian(ctx, 1)
        hs = SectionSum.from_sections([_section(h, 0, 0)])
        rep.add("full-scalar", f"harmonic l={l}", "holomorphic polynomials are harmonic", NORMAL_FORM,
                apply_sum(lap, hs).is_zero())
        for k in range(1, kmax + 1):
            lab = SpectralLabel(k, l, n, 0)
            with stopwatch() as sw:
                psi = SectionSum.from_sections(twisted_scalar_state(k, l, n))
                img = apply_sum(G_hat, psi)
                ok = (img - psi.scale(lab.nu)).is_zero()
            rep.add("full-scalar", f"Gamma-1 psi k={k} l={l}", ANCHOR_G + " (full D-dimensional operator)",
                    NORMAL_FORM, ok, witness={"eigenvalue": str(lab.nu)}, millis=sw[0])
            # agreement with the radial sector
            Gm = radial_operator("Gamma-1", l, n, 0, twisted=True)
            psi_r = radial_eigenfunction(lab, twisted=True)
            agree = (Gm.apply(psi_r) - psi_r.scale(lab.nu)).is_zero()
            rep.add("full-scalar", f"radial agreement k={k} l={l}", ANCHOR_G, NORMAL_FORM, ok and agree)
    # realizations by sqrt(r)-sandwiched operators (nabla = d when mu = 0)
    def sq(P):
        # sqrt(r) P sqrt(r) = r (r^(-1/2) P r^(1/2))
        return DiffOp.scalar(ctx, 1, ctx.r) * conjugate_sqrt_r(P)

    for al in range(1, 2 * n + 1):
        rhs = sq(DiffOp.partial(ctx, 1, al)).scale(ctx.i)
        rep.add("full-scalar", f"-Jhat[{al},0] = i sqrt(r) d sqrt(r)", "differential realization of M_(alpha,0)",
                NORMAL_FORM, (-gs.J_hat(al, 0)) == rhs)
    lap_hat = sq(DiffOp.laplacian(ctx, 1))
    r_op = DiffOp.scalar(ctx, 1, ctx.r)
    c_op = DiffOp.scalar(ctx, 1, ctx.const(gs.c) * ctx.r.inverse())
    half = Fraction(1, 2)
    rep.add("full-scalar", "-Jhat[D+1,0] = (sqrt(r) Lap sqrt(r) + r - c/r)/2", "differential realization of M_(D+1,0)",
            NORMAL_FORM, -gs.J_hat(2 * n + 1, 0) == (lap_hat + r_op - c_op).scale(half))
    rep.add("full-scalar", "-Jhat[-1,0] = (sqrt(r) Lap sqrt(r) - r - c/r)/2", "differential realization of M_(-1,0)",
            NORMAL_FORM, -gs.J_hat(-1, 0) == (lap_hat - r_op - c_op).scale(half))
    return rep


def _section(poly, half, decay):
    from .diffop import Section

    return Section(poly, half, Fraction(decay), (1,))
