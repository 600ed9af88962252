"""Exact number types: Gaussian rationals, the quadratic extension Q(i)(sqrt s),
and seeded rational evaluation points."""
from __future__ import annotations

import random
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence, Union

Rationalish = Union[int, Fraction]


class GaussianRational:
    """re + i*im with Fraction parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex values are not exact")
        return cls(value, 0)

    def __add__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussianRational.coerce(other)
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * GaussianRational(other.re / n, -other.im / n)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i"
        return f"({self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i)"

    def to_json(self):
        return [str(self.re), str(self.im)]


I_UNIT = GaussianRational(0, 1)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Exact square root of a nonnegative rational, or None if irrational."""
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


class QuadExtValue:
    """a + b*sqrt(s) with a, b Gaussian rationals and s a positive rational.

    When s is a rational square the radical is folded into ``a`` on
    construction, so ``b == 0`` and zero testing stays sound.
    """

    __slots__ = ("a", "b", "s")

    def __init__(self, a=0, b=0, s: Rationalish = 1):
        a = GaussianRational.coerce(a)
        b = GaussianRational.coerce(b)
        s = Fraction(s)
        if s <= 0:
            raise ValueError("extension parameter must be positive")
        if b:
            root = rational_sqrt(s)
            if root is not None:
                a, b = a + b * root, GaussianRational()
        self.a, self.b, self.s = a, b, s

    def _check(self, other: "QuadExtValue") -> "QuadExtValue":
        if not isinstance(other, QuadExtValue):
            return QuadExtValue(other, 0, self.s)
        if other.s != self.s and other.b and self.b:
            raise ValueError("incompatible quadratic extensions")
        return other

    def __add__(self, other):
        other = self._check(other)
        s = self.s if self.b else other.s
        return QuadExtValue(self.a + other.a, self.b + other.b, s)

    __radd__ = __add__

    def __neg__(self):
        return QuadExtValue(-self.a, -self.b, self.s)

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._check(other)
        s = self.s if self.b else other.s
        return QuadExtValue(self.a * other.a + self.b * other.b * s,
                            self.a * other.b + self.b * other.a, s)

    __rmul__ = __mul__

    def conjugate_radical(self) -> "QuadExtValue":
        return QuadExtValue(self.a, -self.b, self.s)

    def inverse(self) -> "QuadExtValue":
        n = self.a * self.a - self.b * self.b * self.s
        if not n:
            raise ZeroDivisionError("zero in quadratic extension")
        return QuadExtValue(self.a / n, -self.b / n, self.s)

    def __truediv__(self, other):
        return self * self._check(other).inverse()

    def is_zero(self) -> bool:
        return not self.a and not self.b

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = QuadExtValue(other, 0, self.s)
        if not isinstance(other, QuadExtValue):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.a, self.b, self.s if self.b else None))

    def __complex__(self):
        root = float(self.s) ** 0.5
        return complex(self.a) + complex(self.b) * root

    def __repr__(self):
        if not self.b:
            return repr(self.a)
        return f"{self.a!r} + {self.b!r}*sqrt({self.s})"

    def to_json(self):
        return {"a": self.a.to_json(), "b": self.b.to_json(), "s": str(self.s)}


class RationalPoint:
    """A point of R^D with rational coordinates and cached |x|^2 > 0."""

    __slots__ = ("coords", "s")

    def __init__(self, coords: Iterable[Rationalish]):
        self.coords = tuple(Fraction(c) for c in coords)
        self.s = sum((c * c for c in self.coords), Fraction(0))
        if self.s == 0:
            raise ValueError("evaluation point must avoid the origin")

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def r(self) -> QuadExtValue:
        return QuadExtValue(0, 1, self.s)

    def __iter__(self):
        return iter(self.coords)

    def __repr__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self):
        return [str(c) for c in self.coords]


def random_points(dim: int, count: int, seed: int) -> list[RationalPoint]:
    """Seeded generic points: every coordinate nonzero, drawn from
    {-9..-1, 1..9}/den with den in {1, 2, 3}."""
    rng = random.Random(seed)
    values = [v for v in range(-9, 10) if v]
    points = []
    while len(points) < count:
        coords = [Fraction(rng.choice(values), rng.choice((1, 2, 3))) for _ in range(dim)]
        # the first D-1 coordinates are nonzero, so sum_{a<D} x_a^2 != 0 holds
        points.append(RationalPoint(coords))
    return points


def gauss_matrix(rows: Sequence[Sequence]) -> tuple[tuple[GaussianRational, ...], ...]:
    return tuple(tuple(GaussianRational.coerce(v) for v in row) for row in rows)
