from fractions import Fraction

import pytest

from pascals import format_rational, parse_rational, rational

from conftest import random_fraction


def test_elementary_arithmetic():
    assert Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6)
    assert Fraction(7) * Fraction(0) == 0


def test_division_exact_with_multiplicative_round_trip():
    q = Fraction(5, 36) / Fraction(1, 72)
    assert q == 10
    assert q * Fraction(1, 72) == Fraction(5, 36)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Fraction(1) / Fraction(0)


def test_field_axioms_on_random_values(rng):
    for _ in range(200):
        a, b, c = (random_fraction(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a


def test_always_reduced_positive_denominator(rng):
    for _ in range(100):
        q = random_fraction(rng) - random_fraction(rng)
        assert q.denominator > 0
        from math import gcd

        assert gcd(abs(q.numerator), q.denominator) == 1


def test_string_round_trip():
    for text in ("5/36", "-37/36", "10", "0", "-49/349"):
        assert format_rational(parse_rational(text)) == text
    assert format_rational(Fraction(10, 1)) == "10"
    assert format_rational(Fraction(-5, 36)) == "-5/36"


def test_parse_rejects_non_rationals():
    for bad in ("1.5", "1e3", "3/0", "5/-2", "x", "", "1/2/3"):
        with pytest.raises(ValueError):
            parse_rational(bad)


def test_rational_rejects_floats():
    with pytest.raises(TypeError):
        rational(0.5)
