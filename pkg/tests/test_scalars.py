import random
from fractions import Fraction

import pytest

from jordan_strata.scalars import RingMismatch, Scalar, four_squares, two_squares


def test_field_ops_rational():
    a = Scalar(Fraction(3, 4))
    b = Scalar(Fraction(-2, 5))
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a - a == Scalar(0)
    with pytest.raises(ZeroDivisionError):
        Scalar(0).inverse()


def test_field_ops_gaussian():
    rng = random.Random(0)
    for _ in range(50):
        a = Scalar(Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3])),
                   Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3])), True)
        b = Scalar(Fraction(rng.randint(-5, 5)), Fraction(rng.randint(-5, 5)), True)
        if not b.is_zero():
            assert (a / b) * b == a
        assert a.conjugate().conjugate() == a
        assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_ring_mixing_raises():
    with pytest.raises(RingMismatch):
        Scalar(1) + Scalar(1, 0, True)


def test_gaussian_sqrt():
    i = Scalar.i()
    two_i = i + i
    r = two_i.sqrt()
    assert r is not None and r * r == two_i  # (1+i)^2 = 2i
    assert Scalar(2, 0, True).sqrt() is None  # 2 is not a Gaussian square
    assert Scalar(-1, 0, True).sqrt() == Scalar(0, 1, True) or (
        Scalar(-1, 0, True).sqrt() * Scalar(-1, 0, True).sqrt() == Scalar(-1, 0, True)
    )
    assert Scalar(Fraction(9, 4)).sqrt() == Fraction(3, 2)
    assert Scalar(2).sqrt() is None


def test_square_sums():
    assert two_squares(Fraction(5)) is not None
    assert two_squares(Fraction(3)) is None  # 3 is not a sum of two squares
    for q in (Fraction(7), Fraction(3, 2), Fraction(15, 4)):
        parts = four_squares(q)
        assert sum(x * x for x in parts) == q


def test_json_round_trip():
    for s in (Scalar(Fraction(-7, 3)), Scalar(Fraction(1, 2), Fraction(-5, 4), True)):
        assert Scalar.from_json(s.to_json()) == s
