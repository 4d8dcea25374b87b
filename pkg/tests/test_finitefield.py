import pytest

from brauer import FiniteField, corestrict, power_residue_character
from brauer.finitefield import norm_to_prime_field


F5 = FiniteField(5)
F7 = FiniteField(7)
F13 = FiniteField(13)
F49 = FiniteField(7, 2)


def test_field_construction_rejects_bad_input():
    with pytest.raises(ValueError):
        FiniteField(6)
    with pytest.raises(ValueError):
        FiniteField(5, 0)
    with pytest.raises(ValueError):
        FiniteField(5, 2, modulus=(1, 0, 2))  # not monic
    with pytest.raises(ValueError):
        FiniteField(5, 2, modulus=(4, 0, 1))  # t^2 - 1 is reducible


def test_field_instances_are_cached():
    assert FiniteField(5) is FiniteField(5)
    assert FiniteField(7, 2) is FiniteField(7, 2)


def test_arithmetic_axioms_by_sampling(rng):
    for F in (F5, F49, FiniteField(13, 2)):
        elems = [F.from_key(rng.randrange(F.order)) for _ in range(30)]
        for a in elems[:10]:
            for b in elems[10:20]:
                assert (a + b) - b == a
                assert a * b == b * a
                if not b.is_zero():
                    assert (a * b) / b == a
        for a in elems:
            if not a.is_zero():
                assert a * a.inverse() == F.one()
                assert a ** (F.order - 1) == F.one()


def test_zeta_is_smallest_of_exact_order():
    assert F5.zeta(2) == F5.element(4)
    assert F5.zeta(4) == F5.element(2)
    assert F7.zeta(3) == F7.element(2)
    assert F13.zeta(2) == F13.element(12)
    assert F13.zeta(4) == F13.element(5)
    assert F5.zeta(2).multiplicative_order() == 2
    with pytest.raises(ValueError):
        F5.zeta(3)


def test_character_examples():
    # identity is always an n-th power
    assert power_residue_character(F5.one(), 2).value == 0
    # Euler criterion: 3^2 = 4 = -1 mod 5
    assert power_residue_character(F5.element(3), 2).value == 1
    # 5^((7-1)/3) = 25 = 4 = 2^2 mod 7
    assert power_residue_character(F7.element(5), 3).value == 2


def test_character_errors():
    with pytest.raises(ValueError):
        power_residue_character(F5.zero(), 2)
    with pytest.raises(ValueError):
        power_residue_character(F5.element(2), 3)
    with pytest.raises(ValueError):
        power_residue_character(F5.element(2), 2, zeta=F5.element(2))


def test_character_is_homomorphism(rng):
    for F, n in ((F5, 2), (F5, 4), (F13, 4), (F49, 3)):
        units = [F.from_key(k) for k in range(1, F.order)
                 if not F.from_key(k).is_zero()]
        sample = [units[rng.randrange(len(units))] for _ in range(25)]
        for u in sample[:12]:
            for v in sample[12:]:
                lhs = power_residue_character(u * v, n).value
                rhs = (power_residue_character(u, n).value
                       + power_residue_character(v, n).value) % n
                assert lhs == rhs
        for u in sample:
            assert power_residue_character(u ** n, n).value == 0


def test_corestrict_trivial_extension():
    for k in range(1, 5):
        u = F5.element(k)
        assert corestrict(u, 2) == power_residue_character(u, 2)


def test_corestrict_norm_of_generator():
    # the norm F_49 -> F_7 raises to the power (49-1)/(7-1) = 8
    gen = next(u for u in F49.elements()
               if not u.is_zero() and u.multiplicative_order() == 48)
    assert norm_to_prime_field(gen) == F7.element((gen ** 8).coeffs[0])
    assert corestrict(gen, 3) == power_residue_character(
        norm_to_prime_field(gen), 3)


def test_corestrict_kills_nth_powers(rng):
    for _ in range(20):
        u = F49.from_key(rng.randrange(1, 49))
        if u.is_zero():
            continue
        assert corestrict(u ** 3, 3).value == 0


def test_norm_is_multiplicative(rng):
    for _ in range(25):
        u = F49.from_key(rng.randrange(1, 49))
        v = F49.from_key(rng.randrange(1, 49))
        if u.is_zero() or v.is_zero():
            continue
        assert (norm_to_prime_field(u * v)
                == norm_to_prime_field(u) * norm_to_prime_field(v))


def test_corestrict_of_base_class_is_multiplication_by_degree(rng):
    # u in F_7 included into F_49: corestriction doubles the class
    for k in range(1, 7):
        u7 = F7.element(k)
        u49 = F49.element(k)
        assert (power_residue_character(u49, 3).value
                == 2 * power_residue_character(u7, 3).value % 3)
        assert corestrict(u49, 3).value == (2 * power_residue_character(u7, 3).value) % 3
