"""Weights of B_n and D_n, Weyl dimensions, branching B_n -> D_n, and the
abstract so(2, 2n+1) defining representation with its root vectors."""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from itertools import combinations, product

import numpy as np

from .report import NORMAL_FORM, VerificationReport, stopwatch

HALF = Fraction(1, 2)


class NonDominant(ValueError):
    pass


@dataclass(frozen=True)
class Weight:
    entries: tuple
    series: str  # "B", "D" or "G"

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(Fraction(e) for e in self.entries))

    def __str__(self):
        return "(" + ", ".join(str(e) for e in self.entries) + ")"

    def to_json(self):
        return [str(e) for e in self.entries]


def _same_class(entries) -> bool:
    twice = [2 * e for e in entries]
    if any(t.denominator != 1 for t in twice):
        return False
    parities = {int(t) % 2 for t in twice}
    return len(parities) <= 1


def is_dominant(series: str, lam) -> bool:
    lam = [Fraction(x) for x in lam]
    if not _same_class(lam):
        return False
    if any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        return False
    if series == "B":
        return lam[-1] >= 0
    if series == "D":
        return len(lam) == 1 or lam[-2] >= abs(lam[-1])
    raise ValueError(f"unknown series {series!r}")


# ---------------------------------------------------------------------------
# root data

@lru_cache(maxsize=None)
def positive_roots(series: str, n: int) -> tuple:
    roots = []
    for i, j in combinations(range(n), 2):
        for sign in (-1, 1):
            v = [0] * n
            v[i], v[j] = 1, sign
            roots.append(tuple(v))
    if series == "B":
        for i in range(n):
            v = [0] * n
            v[i] = 1
            roots.append(tuple(v))
    return tuple(roots)


def rho(series: str, n: int) -> tuple:
    if series == "B":
        return tuple(Fraction(2 * (n - i) - 1, 2) for i in range(n))
    return tuple(Fraction(n - 1 - i) for i in range(n))


def _dot(a, b):
    return sum((Fraction(x) * y for x, y in zip(a, b)), Fraction(0))


def weyl_dimension(series: str, n: int, lam) -> int:
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) != n or not is_dominant(series, lam):
        raise NonDominant(f"{lam} is not a dominant {series}{n} weight")
    r = rho(series, n)
    lr = tuple(a + b for a, b in zip(lam, r))
    num, den = Fraction(1), Fraction(1)
    for alpha in positive_roots(series, n):
        num *= _dot(lr, alpha)
        den *= _dot(r, alpha)
    d = num / den
    assert d.denominator == 1 and d > 0
    return int(d)


# ---------------------------------------------------------------------------
# Freudenthal multiplicities: an independent dimension oracle

def _dominant_rep(series: str, w):
    a = sorted((abs(x) for x in w), reverse=True)
    if series == "D":
        negatives = sum(1 for x in w if x < 0)
        if negatives % 2 and a[-1] != 0:
            a[-1] = -a[-1]
    return tuple(a)


def _orbit_size(series: str, w) -> int:
    a = [abs(x) for x in w]
    counts = Counter(a)
    perms = factorial(len(a))
    for c in counts.values():
        perms //= factorial(c)
    nonzero = sum(1 for x in a if x)
    size = perms * 2 ** nonzero
    if series == "D" and nonzero == len(a):
        size //= 2
    return size


def _below(series: str, lam, mu) -> bool:
    """mu <= lam in the dominance order (lam - mu a nonnegative integer root combination)."""
    d = [a - b for a, b in zip(lam, mu)]
    sums, s = [], Fraction(0)
    for x in d:
        s += x
        sums.append(s)
    n = len(d)
    if series == "B":
        coeffs = sums
    else:
        if n == 1:
            return d[0] == 0
        coeffs = sums[: n - 2] + [(sums[n - 2] - d[-1]) / 2, sums[-1] / 2]
    return all(c >= 0 and c.denominator == 1 for c in coeffs)


def dominant_weights_below(series: str, n: int, lam) -> list:
    lam = tuple(Fraction(x) for x in lam)
    top = int(lam[0]) + 1
    shift = lam[0] - int(lam[0])
    out = []
    for vals in product(range(-top, top + 1), repeat=n):
        mu = tuple(Fraction(v) + shift for v in vals)
        if is_dominant(series, mu) and _below(series, lam, mu):
            out.append(mu)
    return out


def freudenthal_dimension(series: str, n: int, lam) -> int:
    lam = tuple(Fraction(x) for x in lam)
    if not is_dominant(series, lam):
        raise NonDominant(str(lam))
    r = rho(series, n)
    roots = positive_roots(series, n)
    doms = dominant_weights_below(series, n, lam)
    dom_set = set(doms)
    mult = {lam: 1}
    lr = tuple(a + b for a, b in zip(lam, r))
    norm_lr = _dot(lr, lr)
    # nu > mu dominant implies |nu + rho| > |mu + rho|, so this order visits
    # every weight after all weights above it
    shifted_norm = lambda mu: _dot([a + b for a, b in zip(mu, r)], [a + b for a, b in zip(mu, r)])
    for mu in sorted(doms, key=shifted_norm, reverse=True):
        if mu == lam:
            continue
        acc = Fraction(0)
        for alpha in roots:
            k = 1
            while True:
                w = tuple(m + k * a for m, a in zip(mu, alpha))
                rep = _dominant_rep(series, w)
                if rep not in dom_set:
                    break
                acc += mult.get(rep, 0) * _dot(w, alpha)
                k += 1
        mr = tuple(a + b for a, b in zip(mu, r))
        m = 2 * acc / (norm_lr - _dot(mr, mr))
        assert m.denominator == 1
        mult[mu] = int(m)
    return sum(m * _orbit_size(series, mu) for mu, m in mult.items())


# ---------------------------------------------------------------------------
# branching

def branch_B_to_D(lam) -> list:
    """Interlacing patterns lam_1 >= m_1 >= lam_2 >= ... >= lam_n >= |m_n|."""
    lam = tuple(Fraction(x) for x in lam)
    n = len(lam)
    if not is_dominant("B", lam):
        raise NonDominant(str(lam))
    ranges = []
    for i in range(n):
        hi = lam[i]
        lo = lam[i + 1] if i + 1 < n else -lam[n - 1]
        vals = []
        v = lo
        while v <= hi:
            vals.append(v)
            v += 1
        ranges.append(vals)
    return sorted((tuple(m) for m in product(*ranges)), reverse=True)


def level_weight(n: int, two_mu: int, I: int) -> tuple:
    mu = Fraction(two_mu, 2)
    return (I + mu,) + (mu,) * (n - 1)


def sector_weights(n: int, two_mu: int, l: int) -> list:
    """D_l^0 for mu = 0, D_l^+ and D_l^- for mu = 1/2."""
    if two_mu == 0:
        return [(Fraction(l),) + (Fraction(0),) * (n - 1)]
    base = (l + HALF,) + (HALF,) * (n - 2)
    return [base + (HALF,), base + (-HALF,)]


def level_branching(n: int, two_mu: int, I: int) -> list:
    return sorted((w for l in range(I + 1) for w in sector_weights(n, two_mu, l)), reverse=True)


def uniqueness_search(n: int, two_mu: int, I: int, bound: int) -> list:
    """Every dominant B_n weight with lam_1 <= bound (right congruence class)
    whose branching equals the level-I multiset."""
    target = Counter(level_branching(n, two_mu, I))
    shift = Fraction(two_mu, 2)
    hits = []
    for vals in product(range(bound + 1), repeat=n):
        lam = tuple(Fraction(v) + shift for v in vals)
        if lam[0] > bound or not is_dominant("B", lam):
            continue
        if Counter(branch_B_to_D(lam)) == target:
            hits.append(lam)
    return hits


def k_type_table(n: int, two_mu: int, lmax: int) -> dict:
    mu = Fraction(two_mu, 2)
    rows = []
    for l in range(lmax + 1):
        l_mu = l + mu + n - Fraction(3, 2)
        w = (l + mu,) + (mu,) * (n - 1)
        rows.append({"l": l, "spin2_weight": -l_mu - 1, "weight": w, "dim": weyl_dimension("B", n, w)})
    label = (-(n + mu - HALF),) + (mu,) * n
    return {"rows": rows, "highest_weight": label,
            "sl2_lowest_labels": [row["spin2_weight"] for row in rows],
            "weight_order": "(H_0, H_1, ..., H_n)"}


def _fmt(w) -> str:
    return "(" + ",".join(str(x) for x in w) + ")"


def verify_decompositions(n: int, two_mu: int, imax: int = 6) -> VerificationReport:
    rep = VerificationReport({"n": n, "mu": str(Fraction(two_mu, 2)), "imax": imax})
    anchor_a = "level I carries the Spin(2n+1) module (I+mu, mu, ..., mu)"
    for I in range(imax + 1):
        lam = level_weight(n, two_mu, I)
        with stopwatch() as sw:
            dim = weyl_dimension("B", n, lam)
            parts = [weyl_dimension("D", n, w) for l in range(I + 1) for w in sector_weights(n, two_mu, l)]
        rep.add("reps", f"(a) dim level I={I}", anchor_a, NORMAL_FORM, dim == sum(parts),
                witness={"weight": _fmt(lam), "dim": dim, "parts": parts}, millis=sw[0])
        got = branch_B_to_D(lam)
        rep.add("reps", f"(b) branching I={I}", "branching Spin(2n+1) -> Spin(2n) of a level", NORMAL_FORM,
                Counter(got) == Counter(level_branching(n, two_mu, I)),
                witness={"branches": [_fmt(w) for w in got]})
        hits = uniqueness_search(n, two_mu, I, imax + 1)
        rep.add("reps", f"(c) unique solution I={I}", "the level module is the only solution of the branching",
                NORMAL_FORM, hits == [lam], witness={"solutions": [_fmt(w) for w in hits]})
        from .radial import SpectralLabel

        sectors = [SpectralLabel(k, I + 1 - k, n, two_mu) for k in range(1, I + 2)]
        total = sum(sum(weyl_dimension("D", n, w) for w in sector_weights(n, two_mu, s.l)) for s in sectors)
        rep.add("reps", f"(d) degeneracy I={I}", "degeneracy of the energy level E_I", NORMAL_FORM,
                total == dim and all(s.I == I for s in sectors), witness={"degeneracy": total})
    # independent dimension oracle and branching dimension sums
    for series in ("B", "D"):
        for lam in _small_weights(series, n):
            ok = weyl_dimension(series, n, lam) == freudenthal_dimension(series, n, lam)
            rep.add("reps", f"Weyl vs Freudenthal {series}{n}{_fmt(lam)}", "Weyl dimension formula", NORMAL_FORM, ok,
                    witness={"dim": weyl_dimension(series, n, lam)})
    for lam in _small_weights("B", n):
        ok = sum(weyl_dimension("D", n, m) for m in branch_B_to_D(lam)) == weyl_dimension("B", n, lam)
        rep.add("reps", f"branching dimension sum {_fmt(lam)}", "branching rule Spin(2n+1) -> Spin(2n)",
                NORMAL_FORM, ok)
    table = k_type_table(n, two_mu, imax)
    steps = [b["spin2_weight"] - a["spin2_weight"] for a, b in zip(table["rows"], table["rows"][1:])]
    rep.add("reps", "K-types", "K-type decomposition of the module", NORMAL_FORM, all(s == -1 for s in steps),
            witness={"rows": [[r["l"], str(r["spin2_weight"]), _fmt(r["weight"]), r["dim"]] for r in table["rows"]],
                     "highest_weight": _fmt(table["highest_weight"])})
    return rep


def _small_weights(series: str, n: int, top: int = 3) -> list:
    out = []
    for twice in product(range(-2 * top, 2 * top + 1), repeat=n):
        lam = tuple(Fraction(t, 2) for t in twice)
        if is_dominant(series, lam) and lam[0] <= (top if n == 2 else 2):
            out.append(lam)
    return out


# ---------------------------------------------------------------------------
# abstract so(2, 2n+1): defining matrices over Z[i] as (re, im) integer pairs

class GMat:
    """Matrix with Gaussian-integer entries stored as two int64 arrays."""

    __slots__ = ("re", "im")

    def __init__(self, re, im=None):
        self.re = np.asarray(re, dtype=np.int64)
        self.im = np.zeros_like(self.re) if im is None else np.asarray(im, dtype=np.int64)

    def __add__(self, o):
        return GMat(self.re + o.re, self.im + o.im)

    def __sub__(self, o):
        return GMat(self.re - o.re, self.im - o.im)

    def __neg__(self):
        return GMat(-self.re, -self.im)

    def __matmul__(self, o):
        return GMat(self.re @ o.re - self.im @ o.im, self.re @ o.im + self.im @ o.re)

    def scale(self, a: int = 1, b: int = 0) -> "GMat":
        """Multiply by a + b i."""
        return GMat(a * self.re - b * self.im, a * self.im + b * self.re)

    def times_i(self):
        return self.scale(0, 1)

    def is_zero(self):
        return not self.re.any() and not self.im.any()

    def __eq__(self, o):
        return (self - o).is_zero()

    __hash__ = None


def bracket(a: GMat, b: GMat) -> GMat:
    return a @ b - b @ a


class AbstractAlgebra:
    def __init__(self, n: int):
        self.n = n
        self.labels = list(range(-1, 2 * n + 2))
        self.N = len(self.labels)
        self.pos = {A: i for i, A in enumerate(self.labels)}
        self.M = {}
        for A, B in combinations(self.labels, 2):
            self.M[(A, B)] = self._defining(A, B)

    def eta(self, A, B) -> int:
        if A != B:
            return 0
        return 1 if A in (-1, 0) else -1

    def _defining(self, A, B, raise_row: bool = True) -> GMat:
        # [M_AB]_JK = -i (eta_AJ eta_BK - eta_BJ eta_AK), used as a matrix with
        # the row index raised by eta; the plain lower-index array closes on
        # the compact so(2n+3) brackets instead
        im = np.zeros((self.N, self.N), dtype=np.int64)
        for J in self.labels:
            for K in self.labels:
                v = -(self.eta(A, J) * self.eta(B, K) - self.eta(B, J) * self.eta(A, K))
                im[self.pos[J], self.pos[K]] = v * (self.eta(J, J) if raise_row else 1)
        return GMat(np.zeros_like(im), im)

    def lower_index_failures(self) -> int:
        """Bracket pairs violated when the lower-index array is multiplied as is."""
        low = {k: self._defining(*k, raise_row=False) for k in self.M}
        m = lambda A, B: low[(A, B)]
        saved, self.M = self.M, low
        try:
            return sum(1 for p, q in combinations(low, 2)
                       if not bracket(m(*p), m(*q)) == self.bracket_rhs(*p, *q))
        finally:
            self.M = saved

    def m(self, A, B) -> GMat:
        if A == B:
            return GMat(np.zeros((self.N, self.N), dtype=np.int64))
        return self.M[(A, B)] if A < B else -self.M[(B, A)]

    def bracket_rhs(self, A, B, A2, B2) -> GMat:
        # i (eta_AA' M_BB' + eta_BB' M_AA' - eta_AB' M_BA' - eta_BA' M_AB')
        acc = GMat(np.zeros((self.N, self.N), dtype=np.int64))
        for e, X, Y, sign in ((self.eta(A, A2), B, B2, 1), (self.eta(B, B2), A, A2, 1),
                              (self.eta(A, B2), B, A2, -1), (self.eta(B, A2), A, B2, -1)):
            if e:
                acc = acc + self.m(X, Y).scale(0, sign * e)
        return acc

    def cartan(self) -> list:
        return [self.m(-1, 0)] + [-self.m(2 * j - 1, 2 * j) for j in range(1, self.n + 1)]

    def root_vectors(self) -> dict:
        """alpha (tuple over H_0..H_n) -> c * E_alpha with c = 2 or sqrt(2) dropped."""
        out = {}
        n = self.n
        for j, k in combinations(range(n + 1), 2):
            for e1, e2 in product((1, -1), repeat=2):
                E = (self.m(2 * j - 1, 2 * k - 1) + self.m(2 * j, 2 * k - 1).scale(0, e1)
                     + self.m(2 * j - 1, 2 * k).scale(0, e2) - self.m(2 * j, 2 * k).scale(e1 * e2))
                alpha = [0] * (n + 1)
                alpha[j], alpha[k] = e1, e2
                out[tuple(alpha)] = E
        for j in range(n + 1):
            for e in (1, -1):
                E = self.m(2 * j - 1, 2 * n + 1) + self.m(2 * j, 2 * n + 1).scale(0, e)
                alpha = [0] * (n + 1)
                alpha[j] = e
                out[tuple(alpha)] = E
        return out


def abstract_algebra_checks(n: int, seed: int = 0) -> VerificationReport:
    rep = VerificationReport({"n": n})
    alg = AbstractAlgebra(n)
    gens = list(alg.M)
    rep.add("abstract", "dim g", "so(2n+3) has (2n+3)(2n+2)/2 generators", NORMAL_FORM,
            len(gens) == (2 * n + 3) * (2 * n + 2) // 2, witness={"dim": len(gens)})
    bad = []
    with stopwatch() as sw:
        for (A, B), (A2, B2) in combinations(gens, 2):
            if not bracket(alg.m(A, B), alg.m(A2, B2)) == alg.bracket_rhs(A, B, A2, B2):
                bad.append([A, B, A2, B2])
    rep.add("abstract", "structure constants", "bracket of the abstract generators M_AB", NORMAL_FORM, not bad,
            witness={"pairs": len(gens) * (len(gens) - 1) // 2, "row_index": "raised by eta",
                     "lower_index_reading_failures": alg.lower_index_failures()},
            residual={"failing": bad[:5]}, millis=sw[0])
    rng = random.Random(seed)
    ok = True
    for _ in range(30):
        a, b, c = (alg.M[g] for g in rng.sample(gens, 3))
        jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b))
        ok = ok and jac.is_zero()
    rep.add("abstract", "Jacobi", "Jacobi identity on 30 seeded triples", NORMAL_FORM, ok)
    H = alg.cartan()
    rep.add("abstract", "Cartan commute", "Cartan subalgebra H_0..H_n", NORMAL_FORM,
            all(bracket(H[i], H[j]).is_zero() for i in range(len(H)) for j in range(len(H))))
    roots = alg.root_vectors()
    rep.add("abstract", "root count", "root vectors of so(2n+3)", NORMAL_FORM,
            len(roots) == 2 * (n + 1) ** 2 and len(roots) + len(H) == len(gens))
    for alpha, E in sorted(roots.items()):
        ok0 = bracket(H[0], E) == E.scale(alpha[0])
        rep.add("abstract", f"[H0, E{list(alpha)}]", "weight shift [H_0, E_alpha] = alpha_0 E_alpha", NORMAL_FORM,
                ok0, witness={"alpha_0": alpha[0]})
        full = all(bracket(H[j], E) == E.scale(alpha[j]) for j in range(n + 1))
        rep.add("abstract", f"[H, E{list(alpha)}]", "Cartan basis: [H_j, E_alpha] = alpha_j E_alpha", NORMAL_FORM,
                full)
    for sign in (1, -1):
        # sqrt(2) E_(+-) = M_(-1,D+1) +- i M_(0,D+1); the factor cancels in the bracket
        E = alg.m(-1, 2 * n + 1) + alg.m(0, 2 * n + 1).scale(0, sign)
        rep.add("abstract", f"[M(-1,0), E{'+' if sign > 0 else '-'}]", "sl(2) ladder [M_(-1,0), E_+-] = +-E_+-",
                NORMAL_FORM, bracket(alg.m(-1, 0), E) == E.scale(sign))
    return rep
