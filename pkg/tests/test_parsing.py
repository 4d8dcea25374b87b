import pytest

from brauer import (
    FiniteField,
    ParseError,
    Place,
    Poly,
    RatFunc,
    parse_place,
    parse_poly,
    parse_ratfunc,
    parse_symbol_sum,
)


F5 = FiniteField(5)
F7 = FiniteField(7)
t = Poly.gen(F5)


def test_parse_poly_basic():
    assert parse_poly("t^2 + 3t + 1", F5) == t ** 2 + 3 * t + 1
    assert parse_poly("t^2+3*t+1", F5) == t ** 2 + 3 * t + 1
    assert parse_poly("7", F5) == Poly.constant(F5, 2)
    assert parse_poly("-t", F5) == -t
    assert parse_poly("(t+1)(t+2)", F5) == (t + 1) * (t + 2)
    assert parse_poly("(t+1)^3", F5) == (t + 1) ** 3
    assert parse_poly("2(t+1) - t", F5) == 2 * (t + 1) - t


def test_parse_poly_errors():
    for bad in ("", "t +", "t^", "(t", "t^-2", "x+1"):
        with pytest.raises(ParseError):
            parse_poly(bad, F5)


def test_parse_ratfunc():
    f = parse_ratfunc("(t^2+1)/(t+2)", F5)
    assert f == RatFunc(t ** 2 + 1, t + 2)
    assert parse_ratfunc("t+1", F5) == RatFunc(t + 1)
    assert parse_ratfunc("3/t", F5) == RatFunc(Poly.constant(F5, 3), t)


def test_parse_place():
    assert parse_place("t+1", F5) == Place(F5, t + 1)
    assert parse_place("inf", F5) == Place.infinity(F5)
    assert parse_place("infinity", F5) == Place.infinity(F5)
    assert parse_place("oo", F5) == Place.infinity(F5)
    # non-monic input is normalized
    assert parse_place("2t+2", F5) == Place(F5, t + 1)


def test_parse_place_rejects_reducible():
    with pytest.raises(ParseError, match="irreducible"):
        parse_place("t^2+1", F5)  # (t+2)(t+3) mod 5
    with pytest.raises(ParseError):
        parse_place("3", F5)


def test_parse_symbol_sum():
    alpha = parse_symbol_sum("(t, t+1)_2 + 3*(t+2, 4)_2", F5)
    assert alpha.n == 2
    assert len(alpha.terms) == 2
    beta = parse_symbol_sum("(t, 2)_3 - (t+1, t)_3", F7)
    assert beta.terms[1][2] == 2  # -1 mod 3


def test_parse_symbol_sum_errors():
    with pytest.raises(ParseError):
        parse_symbol_sum("(t, t+1)_2 + (t, 2)_3", F5)  # mixed n
    with pytest.raises(ParseError):
        parse_symbol_sum("(t t+1)_2", F5)
