from fractions import Fraction as F

import pytest

from boole_witt.src.errors import RationalParseError
from boole_witt.src.rational_parser import parse_grid, parse_int_grid, parse_rational, tokenize


def test_parse_integers_and_fractions():
    assert parse_rational("3") == 3
    assert parse_rational("6/4") == F(3, 2)
    assert parse_rational("-1/3") == F(-1, 3)
    assert parse_rational(" +2 ") == 2


def test_unicode_minus_is_accepted():
    assert parse_rational("−1/3") == F(-1, 3)


def test_decimal_is_rejected_with_position():
    with pytest.raises(RationalParseError) as ei:
        parse_rational("0.5")
    assert ei.value.col == 1
    assert "fraction" in str(ei.value)


def test_zero_denominator():
    with pytest.raises(RationalParseError) as ei:
        parse_rational("1/0")
    assert "Zero denominator" in str(ei.value)


def test_trailing_garbage_reports_column():
    with pytest.raises(RationalParseError) as ei:
        parse_rational("1/2x")
    msg = str(ei.value)
    assert "line 1" in msg and "col 4" in msg


def test_grids():
    assert parse_grid("1,2,1/2,-1/3") == [F(1), F(2), F(1, 2), F(-1, 3)]
    assert parse_grid("") == []
    assert parse_int_grid("3, 5, 7") == [3, 5, 7]
    with pytest.raises(RationalParseError):
        parse_int_grid("3,5/2")
    with pytest.raises(RationalParseError):
        parse_grid("1,,2")


def test_tokenize_skips_whitespace():
    kinds = [t.type for t in tokenize(" 1 / 2 ")]
    assert kinds == ["INT", "SLASH", "INT"]
