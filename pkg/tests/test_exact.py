from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from micz_verify.exact import GaussianRational, QuadExtValue, RationalPoint, random_points, rational_sqrt

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussianRational, fracs, fracs)
radicands = st.sampled_from([Fraction(2), Fraction(3), Fraction(5, 7), Fraction(29, 9)])


def quad(s):
    return st.builds(lambda a, b: QuadExtValue(a, b, s), gauss, gauss)


def test_i_squared():
    i = GaussianRational(0, 1)
    assert i * i == GaussianRational(-1)


@given(gauss, gauss, gauss)
def test_gaussian_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    if b:
        assert (a / b) * b == a


def test_rational_sqrt():
    assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
    assert rational_sqrt(Fraction(2)) is None
    assert rational_sqrt(Fraction(-1)) is None


@given(radicands.flatmap(lambda s: st.tuples(quad(s), quad(s), quad(s))))
def test_quadratic_field_axioms(t):
    x, y, z = t
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    if not x.is_zero():
        assert (x * x.inverse() - QuadExtValue(1, 0, x.s)).is_zero()


@given(gauss, gauss)
def test_perfect_square_collapses(a, b):
    v = QuadExtValue(a, b, Fraction(25, 4))
    assert not v.b
    assert v.a == a + b * Fraction(5, 2)


def test_nonsquare_zero_test_is_componentwise():
    assert QuadExtValue(0, 0, 2).is_zero()
    assert not QuadExtValue(1, 0, 2).is_zero()
    assert not QuadExtValue(0, 1, 2).is_zero()


def test_rational_point_caches_s():
    p = RationalPoint([3, 4, 0, 0])
    assert p.s == 25
    assert p.r == QuadExtValue(5, 0, 1)
    with pytest.raises(ValueError):
        RationalPoint([0, 0, 0, 0])


def test_random_points_are_seeded_and_generic():
    a = random_points(4, 20, 7)
    b = random_points(4, 20, 7)
    assert [p.coords for p in a] == [p.coords for p in b]
    assert all(c != 0 for p in a for c in p.coords)
    assert all(abs(c.numerator) <= 9 and c.denominator in (1, 2, 3) for p in a for c in p.coords)
    assert [p.coords for p in random_points(4, 20, 8)] != [p.coords for p in a]
