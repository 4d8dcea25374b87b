import pytest

from brauer import (
    ConicBundle,
    ConicModelError,
    FiniteField,
    Place,
    Poly,
    RatFunc,
    check_artin,
    component_torsor,
    count_fiber_points,
    tame_residue,
)
from brauer.conic import degenerate_places, discriminant_places, minimize_at

from conftest import random_poly


F5 = FiniteField(5)
T5 = RatFunc.gen(F5)
PLACE_T = Place(F5, Poly.gen(F5))
INF5 = Place.infinity(F5)


def test_constructor_validation():
    with pytest.raises(ConicModelError, match="odd"):
        ConicBundle(RatFunc.gen(FiniteField(2)), RatFunc.one(FiniteField(2)))
    with pytest.raises(ConicModelError, match="nonzero"):
        ConicBundle(RatFunc.zero(F5), T5)


def test_minimize_at_strips_even_valuations():
    C = ConicBundle(2 * T5 ** 3, 3 * T5 ** 2)
    a0, b0, _ = minimize_at(C, PLACE_T)
    assert a0 == 2 * T5
    assert b0 == RatFunc.constant(F5, 3)


def test_minimize_at_double_uniformizer():
    # both coefficients have odd valuation: switch to (a, -ab)
    C = ConicBundle(2 * T5, 3 * T5)
    a0, b0, _ = minimize_at(C, PLACE_T)
    assert a0 == 2 * T5
    assert b0 == RatFunc.constant(F5, -6)


def test_discriminant_and_degenerate_places():
    C = ConicBundle(T5, RatFunc.constant(F5, 2))
    assert discriminant_places(C) == [PLACE_T, INF5]
    assert degenerate_places(C) == [PLACE_T, INF5]


def test_component_torsor_values():
    C = ConicBundle(T5, RatFunc.constant(F5, 2))
    assert component_torsor(C, PLACE_T).value == 1
    C2 = ConicBundle(T5, RatFunc.constant(F5, 4))
    assert component_torsor(C2, PLACE_T).value == 0


def test_component_torsor_rejects_smooth_fiber():
    C = ConicBundle(T5, RatFunc.constant(F5, 2))
    with pytest.raises(ConicModelError, match="smooth"):
        component_torsor(C, Place(F5, Poly.gen(F5) + 1))


def test_fiber_point_counts():
    C = ConicBundle(T5, RatFunc.constant(F5, 2))
    # nonsplit degenerate fiber: only the singular point
    assert count_fiber_points(C, PLACE_T) == 1
    # split after the quadratic extension: two lines, 2Q + 1 points
    assert count_fiber_points(C, PLACE_T, e=2) == 2 * 25 + 1
    # smooth fiber over F_5 is a smooth conic with q + 1 points
    assert count_fiber_points(C, Place(F5, Poly.gen(F5) + 1)) == 6


def test_split_degenerate_fiber():
    C = ConicBundle(T5, RatFunc.constant(F5, 4))
    assert component_torsor(C, PLACE_T).value == 0
    assert count_fiber_points(C, PLACE_T) == 2 * 5 + 1


def test_check_artin_agrees(rng):
    C = ConicBundle(T5, RatFunc.constant(F5, 2))
    rows = check_artin(C)
    assert rows
    for P, geo, res, agree in rows:
        assert agree
        assert geo == res


def test_torsor_matches_tame_residue(rng):
    F13 = FiniteField(13)
    for _ in range(15):
        a = RatFunc(random_poly(rng, F13, 3), random_poly(rng, F13, 2))
        b = RatFunc(random_poly(rng, F13, 3), random_poly(rng, F13, 2))
        try:
            C = ConicBundle(a, b)
        except ConicModelError:
            continue
        alpha = C.symbol()
        for P in degenerate_places(C):
            assert component_torsor(C, P) == tame_residue(alpha, P)
