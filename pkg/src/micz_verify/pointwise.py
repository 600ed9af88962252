"""Exact matrices over Q(i)(sqrt s) at one evaluation point.

Each entry a + b sqrt(s) is replaced by its 4x4 regular representation on
the Q-basis (1, i, sqrt s, i sqrt s), so a d x d matrix becomes a 4d x 4d
rational flint matrix and products run in C.
"""
from __future__ import annotations

from fractions import Fraction

import flint

from .exact import GaussianRational, QuadExtValue


def _q(x: Fraction) -> flint.fmpq:
    return flint.fmpq(x.numerator, x.denominator)


def _block(z: QuadExtValue, s: Fraction) -> list[list[Fraction]]:
    a1, a2, b1, b2 = z.a.re, z.a.im, z.b.re, z.b.im
    # columns are z*1, z*i, z*sqrt(s), z*i*sqrt(s)
    return [
        [a1, -a2, b1 * s, -b2 * s],
        [a2, a1, b2 * s, b1 * s],
        [b1, -b2, a1, -a2],
        [b2, b1, a2, a1],
    ]


class PointMatrix:
    __slots__ = ("mat", "dim", "s")

    def __init__(self, mat: flint.fmpq_mat, dim: int, s: Fraction):
        self.mat, self.dim, self.s = mat, dim, Fraction(s)

    @classmethod
    def from_quad(cls, rows, s: Fraction) -> "PointMatrix":
        d = len(rows)
        s = Fraction(s)
        entries = [[flint.fmpq(0)] * (4 * d) for _ in range(4 * d)]
        for i, row in enumerate(rows):
            for j, z in enumerate(row):
                if not isinstance(z, QuadExtValue):
                    z = QuadExtValue(z, 0, s)
                if z.is_zero():
                    continue
                blk = _block(z, s)
                for u in range(4):
                    for v in range(4):
                        if blk[u][v]:
                            entries[4 * i + u][4 * j + v] = _q(blk[u][v])
        flat = [x for row in entries for x in row]
        return cls(flint.fmpq_mat(4 * d, 4 * d, flat), d, s)

    @classmethod
    def scalar(cls, value, dim: int, s: Fraction) -> "PointMatrix":
        z = value if isinstance(value, QuadExtValue) else QuadExtValue(value, 0, s)
        return cls.from_quad([[z if i == j else QuadExtValue(0, 0, s) for j in range(dim)] for i in range(dim)], s)

    @classmethod
    def zero(cls, dim: int, s: Fraction) -> "PointMatrix":
        return cls(flint.fmpq_mat(4 * dim, 4 * dim), dim, s)

    def __add__(self, other: "PointMatrix") -> "PointMatrix":
        return PointMatrix(self.mat + other.mat, self.dim, self.s)

    def __sub__(self, other: "PointMatrix") -> "PointMatrix":
        return PointMatrix(self.mat - other.mat, self.dim, self.s)

    def __neg__(self):
        return PointMatrix(-self.mat, self.dim, self.s)

    def __mul__(self, other):
        if isinstance(other, PointMatrix):
            return PointMatrix(self.mat * other.mat, self.dim, self.s)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    __matmul__ = __mul__

    def scale(self, c) -> "PointMatrix":
        if isinstance(c, (int, Fraction)):
            return PointMatrix(self.mat * _q(Fraction(c)), self.dim, self.s)
        return PointMatrix.scalar(c, self.dim, self.s) * self

    def is_zero(self) -> bool:
        return self.mat == flint.fmpq_mat(4 * self.dim, 4 * self.dim)

    def __eq__(self, other):
        if not isinstance(other, PointMatrix):
            return NotImplemented
        return self.mat == other.mat

    __hash__ = None

    def entry(self, i: int, j: int) -> QuadExtValue:
        m = self.mat
        col = [Fraction(int(m[4 * i + u, 4 * j].p), int(m[4 * i + u, 4 * j].q)) for u in range(4)]
        return QuadExtValue(GaussianRational(col[0], col[1]), GaussianRational(col[2], col[3]), self.s)

    def to_quad(self):
        return [[self.entry(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def to_json(self):
        return [[str(self.entry(i, j)) for j in range(self.dim)] for i in range(self.dim)]
