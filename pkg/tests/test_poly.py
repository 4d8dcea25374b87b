import pytest

from brauer import FiniteField, Poly


F5 = FiniteField(5)
F7 = FiniteField(7)


def t(F):
    return Poly.gen(F)


def test_factor_difference_of_squares():
    fac = (t(F5) ** 2 - 1).factor()
    assert fac == [(t(F5) + 1, 1), (t(F5) + 4, 1)]


def test_factor_linear():
    assert t(F5).factor() == [(t(F5), 1)]


def test_factor_irreducible_quadratic():
    f = t(F7) ** 2 + 1
    # oracle: exhaustive root search over F_7; degree 2 and rootless
    assert all(not f.evaluate(F7.element(k)).is_zero() for k in range(7))
    assert f.factor() == [(f, 1)]
    assert f.is_irreducible()


def test_factor_zero_rejected():
    with pytest.raises(ValueError, match="factor zero"):
        Poly.zero(F5).factor()


def test_factor_reassembles(rng):
    for F in (F5, F7, FiniteField(5, 2)):
        for _ in range(40):
            f = Poly(F, [F.from_key(rng.randrange(F.order))
                         for _ in range(rng.randrange(1, 10))])
            if f.is_zero():
                continue
            prod = Poly.constant(F, f.leading_coefficient())
            for g, mult in f.factor():
                assert g.is_monic()
                assert g.is_irreducible()
                prod = prod * g ** mult
            assert prod == f


def test_factors_are_distinct(rng):
    for _ in range(20):
        f = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(2, 9))])
        if f.is_zero():
            continue
        factors = [g for g, _ in f.factor()]
        assert len(factors) == len(set(factors))


def test_repeated_factors():
    f = (t(F5) + 1) ** 3 * (t(F5) ** 2 + 2)
    assert f.factor() == [(t(F5) + 1, 3), (t(F5) ** 2 + 2, 1)]


def test_division_identity(rng):
    for _ in range(40):
        f = Poly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 9))])
        g = Poly(F7, [rng.randrange(7) for _ in range(rng.randrange(1, 6))])
        if g.is_zero():
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.degree < g.degree


def test_gcd_divides_both(rng):
    for _ in range(30):
        f = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 7))])
        g = Poly(F5, [rng.randrange(5) for _ in range(rng.randrange(1, 7))])
        if f.is_zero() or g.is_zero():
            continue
        d = f.gcd(g)
        assert (f % d).is_zero()
        assert (g % d).is_zero()


def test_roots():
    f = (t(F5) - 2) * (t(F5) - 2) * (t(F5) + 1)
    assert f.roots() == [F5.element(2), F5.element(4)]


def test_repr_grammar_round_trip():
    from brauer import parse_poly
    f = t(F5) ** 3 + 3 * t(F5) + 1
    assert parse_poly(repr(f), F5) == f
