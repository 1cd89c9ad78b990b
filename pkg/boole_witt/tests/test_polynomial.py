import random
from fractions import Fraction as F
from math import factorial

import pytest

from boole_witt.src.polynomial import (
    Poly,
    as_rational,
    binomial_general,
    falling_factorial_poly,
    poly_eval,
    poly_shift,
    rational_to_str,
    rising_factorial_poly,
)


def test_trailing_zeros_are_stripped():
    p = Poly((1, 2, 0, 0))
    assert p.coeffs == (F(1), F(2))
    assert p == Poly((1, 2))
    assert Poly((0, 0)).is_zero()
    assert Poly().degree is None


def test_arithmetic_with_scalars_and_polys():
    x = Poly.x()
    p = (x + 1) * (x - 1)
    assert p == Poly((-1, 0, 1))
    assert 2 * p == Poly((-2, 0, 2))
    assert p - p == Poly()
    assert (x + 1) ** 3 == Poly((1, 3, 3, 1))
    assert p / 2 == Poly((F(-1, 2), 0, F(1, 2)))


def test_floats_are_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)
    with pytest.raises(TypeError):
        Poly((0.5,))


def test_rational_to_str_lowest_terms():
    assert rational_to_str(F(6, 4)) == "3/2"
    assert rational_to_str(F(-4, 2)) == "-2"
    assert rational_to_str(0) == "0"


def test_falling_and_rising_factorials():
    # (x)_3 = x^3 - 3x^2 + 2x
    assert falling_factorial_poly(3) == Poly((0, 2, -3, 1))
    # x^(3) = x^3 + 3x^2 + 2x
    assert rising_factorial_poly(3) == Poly((0, 2, 3, 1))
    assert falling_factorial_poly(0) == Poly.constant(1)


def test_binomial_general_rational_upper():
    assert binomial_general(5, 2) == 10
    assert binomial_general(F(1, 2), 2) == F(-1, 8)
    assert binomial_general(-1, 3) == -1
    assert binomial_general(F(7, 3), 0) == 1


def test_shift_and_linear_composition():
    p = Poly((0, 0, 1))  # x^2
    assert poly_shift(p, 1) == Poly((1, 2, 1))
    # p(2x - 1) = 4x^2 - 4x + 1
    assert p.compose_linear(2, -1) == Poly((1, -4, 4))
    assert p.compose_linear(0, 3) == Poly.constant(9)
    assert p.scale_arg(F(1, 2)) == Poly((0, 0, F(1, 4)))


def test_evaluation_and_derivative():
    p = Poly((F(1, 4), 0, F(-3, 2), 1))  # E_3(x)
    assert poly_eval(p, 0) == F(1, 4)
    assert p(F(1, 2)) == 0
    assert p.derivative() == Poly((0, -3, 3))


def test_json_round_trip_and_display():
    p = Poly((F(1, 2), -2, 1))
    assert p.to_json() == ["1/2", "-2", "1"]
    assert Poly.from_json(p.to_json()) == p
    assert str(p) == "x^2 - 2*x + 1/2"
    assert str(Poly()) == "0"


def test_falling_factorial_roots_and_value_at_n():
    for n in range(13):
        ff = falling_factorial_poly(n)
        assert all(ff(j) == 0 for j in range(n))
        assert ff(n) == factorial(n)


def test_rising_factorial_is_signed_falling_factorial_at_minus_x():
    for n in range(13):
        assert rising_factorial_poly(n) == falling_factorial_poly(n).scale_arg(-1) * (-1) ** n


@pytest.mark.parametrize("c", [1, -1, F(1, 2), F(-1, 2), 3])
def test_shift_then_unshift_is_identity(c):
    rng = random.Random(20240607)
    for _ in range(20):
        degree = rng.randint(0, 10)
        p = Poly(F(rng.randint(-9, 9), rng.randint(1, 6)) for _ in range(degree + 1))
        assert poly_shift(poly_shift(p, c), -c) == p


@pytest.mark.parametrize("r", [-2, F(-1, 2), 0, F(1, 2), 5])
def test_binomial_general_times_factorial_is_falling_factorial(r):
    for m in range(9):
        assert binomial_general(r, m) * factorial(m) == poly_eval(falling_factorial_poly(m), r)
