"""Gamma matrices of R^{2n-1}, the so(2n-1) representations s^{2mu}, Casimir."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .exact import GaussianRational, I_UNIT

Matrix = tuple  # tuple of row tuples of GaussianRational

_ZERO = GaussianRational()
_ONE = GaussianRational(1)


class UnsupportedRep(ValueError):
    pass


class NotScalar(ValueError):
    pass


def identity(dim: int) -> Matrix:
    return tuple(tuple(_ONE if i == j else _ZERO for j in range(dim)) for i in range(dim))


def zeros(dim: int) -> Matrix:
    return tuple(tuple(_ZERO for _ in range(dim)) for _ in range(dim))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, k = len(a), len(b[0]), len(b)
    out = []
    for i in range(n):
        row = []
        ai = a[i]
        for j in range(m):
            acc = _ZERO
            for t in range(k):
                if ai[t] and b[t][j]:
                    acc = acc + ai[t] * b[t][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    c = GaussianRational.coerce(c)
    return tuple(tuple(c * x for x in row) for row in a)


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    return mat_add(mat_mul(a, b), mat_mul(b, a))


def dagger(a: Matrix) -> Matrix:
    return tuple(tuple(a[j][i].conjugate() for j in range(len(a))) for i in range(len(a[0])))


def is_hermitian(a: Matrix) -> bool:
    return dagger(a) == a


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def kron(a: Matrix, b: Matrix) -> Matrix:
    return tuple(
        tuple(a[i][j] * b[k][l] for j in range(len(a[0])) for l in range(len(b[0])))
        for i in range(len(a)) for k in range(len(b))
    )


def scalar_value(a: Matrix) -> GaussianRational | None:
    """Return c if a == c*I, else None."""
    c = a[0][0]
    for i, row in enumerate(a):
        for j, v in enumerate(row):
            if v != (c if i == j else _ZERO):
                return None
    return c


# the standard hermitian triple used at every step of the recursion
SIGMA_1: Matrix = ((_ZERO, _ONE), (_ONE, _ZERO))
SIGMA_2: Matrix = ((_ZERO, -I_UNIT), (I_UNIT, _ZERO))
SIGMA_3: Matrix = ((_ONE, _ZERO), (_ZERO, -_ONE))


def gamma_matrices(n: int) -> list[Matrix]:
    """2n-1 hermitian matrices of size 2^(n-1) with {g_a, g_b} = 2 delta_ab.

    Recursion: start from the 1x1 matrix (1) for R^1; going from 2m-1 to
    2m+1 generators, g_a -> g_a (x) sigma_3, then append 1 (x) sigma_1 and
    1 (x) sigma_2.  For n = 2 this gives (sigma_3, sigma_1, sigma_2).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    gammas: list[Matrix] = [((_ONE,),)]
    for _ in range(n - 1):
        size = len(gammas[0])
        ident = identity(size)
        gammas = [kron(g, SIGMA_3) for g in gammas] + [kron(ident, SIGMA_1), kron(ident, SIGMA_2)]
    return gammas


def spin_generators(gammas: Sequence[Matrix]) -> dict[tuple[int, int], Matrix]:
    """gamma_ab = (i/4)[gamma_a, gamma_b], keyed by 1-based (a, b) with a < b."""
    out = {}
    quarter_i = GaussianRational(0, Fraction(1, 4))
    for a, b in combinations(range(len(gammas)), 2):
        out[(a + 1, b + 1)] = mat_scale(quarter_i, commutator(gammas[a], gammas[b]))
    return out


def spin_one_matrices() -> list[Matrix]:
    """Standard spin-1 angular momentum matrices J_x, J_y, J_z with [J_a, J_b] = i eps_abc J_c,
    written in the basis (x, y, z) of the vector representation: (J_a)_bc = -i eps_abc."""
    def eps(a, b, c):
        return ((a - b) * (b - c) * (c - a)) // 2
    return [tuple(tuple(GaussianRational(0, -eps(a, b, c)) for c in range(3)) for b in range(3))
            for a in range(3)]


def so_bracket_residual(gens: dict[tuple[int, int], Matrix], m: int) -> list[tuple]:
    """Check [g_ab, g_cd] = i(d_ac g_db + d_bd g_ca - d_ad g_cb - d_bc g_da) for all pairs.

    Returns the list of failing index quadruples (empty on success).
    """
    dim = len(next(iter(gens.values())))

    def g(a, b):
        if a == b:
            return zeros(dim)
        if a < b:
            return gens[(a, b)]
        return mat_scale(-1, gens[(b, a)])

    failures = []
    keys = sorted(gens)
    for (a, b) in keys:
        for (c, d) in keys:
            lhs = commutator(g(a, b), g(c, d))
            rhs = zeros(dim)
            if a == c:
                rhs = mat_add(rhs, g(d, b))
            if b == d:
                rhs = mat_add(rhs, g(c, a))
            if a == d:
                rhs = mat_sub(rhs, g(c, b))
            if b == c:
                rhs = mat_sub(rhs, g(d, a))
            if lhs != mat_scale(I_UNIT, rhs):
                failures.append((a, b, c, d))
    return failures


@dataclass(frozen=True)
class Rep:
    n: int
    two_mu: int
    dim: int
    generators: dict  # (a, b) 1-based, a < b  ->  Matrix

    def gen(self, a: int, b: int) -> Matrix:
        """gamma_ab with the antisymmetry convention gamma_ba = -gamma_ab."""
        if a == b:
            return zeros(self.dim)
        if a < b:
            return self.generators[(a, b)]
        return mat_scale(-1, self.generators[(b, a)])

    @property
    def rank_index_max(self) -> int:
        return 2 * self.n - 1


def rep_s2mu(n: int, two_mu: int) -> Rep:
    if n < 2:
        raise UnsupportedRep("n must be >= 2")
    m = 2 * n - 1
    keys = list(combinations(range(1, m + 1), 2))
    if two_mu == 0:
        return Rep(n, 0, 1, {k: zeros(1) for k in keys})
    if two_mu == 1:
        return Rep(n, 1, 2 ** (n - 1), spin_generators(gamma_matrices(n)))
    if two_mu == 2 and n == 2:
        return Rep(n, 2, 3, _spin_one_generators())
    raise UnsupportedRep(f"no representation for n={n}, 2mu={two_mu}")


def _spin_one_generators() -> dict:
    """gamma_ab = sign * eps_abc J_c with the sign chosen so that the bracket
    convention matches the spin-1/2 construction."""
    spin = spin_one_matrices()
    for sign in (1, -1):
        gens = {}
        for (a, b) in ((1, 2), (1, 3), (2, 3)):
            c = 6 - a - b
            eps = ((a - b) * (b - c) * (c - a)) // 2
            gens[(a, b)] = mat_scale(sign * eps, spin[c - 1])
        if not so_bracket_residual(gens, 3):
            return gens
    raise UnsupportedRep("spin-1 calibration failed")


def casimir_matrix(rep: Rep) -> Matrix:
    """Sum over a < b of gamma_ab^2 (equal to (1/2) gamma_ab gamma_ab summed over both orders)."""
    acc = zeros(rep.dim)
    for g in rep.generators.values():
        acc = mat_add(acc, mat_mul(g, g))
    return acc


def casimir(rep: Rep) -> Fraction:
    c = scalar_value(casimir_matrix(rep))
    if c is None or c.im:
        raise NotScalar("quadratic Casimir is not a real multiple of the identity")
    return c.re
