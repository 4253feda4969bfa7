from math import gcd

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from quadgenus import (
    QuadraticCharacter,
    all_quadratic_characters,
    char_value,
    chars_equivalent,
    conductor,
    dirichlet_to_kronecker,
    field_conductor,
    is_field_modular,
    is_fundamental,
    is_primitive,
    kronecker,
    kronecker_infinity,
    kronecker_to_dirichlet,
    primitive_core,
    principal_character,
    unit_group_generators,
)

from conftest import discriminants

CHI_8 = QuadraticCharacter(8, (1, -1))
CHI_M8 = QuadraticCharacter(8, (-1, -1))
CHI_M4_MOD8 = QuadraticCharacter(8, (-1, 1))

# the three nontrivial rows of the table of quadratic characters mod 8,
# listed on 1, 3, 5, 7
TABLE_MOD_8 = {
    8: (1, -1, -1, 1),
    -8: (1, 1, -1, -1),
    -4: (1, -1, 1, -1),
}


def values_at(chi, points):
    return tuple(char_value(chi, n) for n in points)


def test_mod8_table_reproduced():
    assert values_at(CHI_8, (1, 3, 5, 7)) == TABLE_MOD_8[8]
    assert values_at(CHI_M8, (1, 3, 5, 7)) == TABLE_MOD_8[-8]
    assert values_at(CHI_M4_MOD8, (1, 3, 5, 7)) == TABLE_MOD_8[-4]


def test_char_value_examples():
    assert char_value(CHI_8, 3) == -1
    assert char_value(CHI_M8, 7) == -1
    assert char_value(CHI_M4_MOD8, 6) == 0


def test_char_value_negative_goes_through_residue():
    assert char_value(CHI_M4_MOD8, -3) == char_value(CHI_M4_MOD8, 5)
    assert char_value(QuadraticCharacter(4, (-1,)), -3) == 1


def test_equivalence_examples():
    assert chars_equivalent(CHI_M4_MOD8, QuadraticCharacter(4, (-1,)))
    assert not chars_equivalent(CHI_8, CHI_M8)
    assert chars_equivalent(CHI_8, CHI_8)


def test_conductor_examples():
    assert conductor(CHI_M4_MOD8) == 4
    assert conductor(CHI_8) == 8
    assert conductor(CHI_M8) == 8
    assert conductor(principal_character(12)) == 1


def test_primitivity_examples():
    assert is_primitive(CHI_8)
    assert is_primitive(CHI_M8)
    assert not is_primitive(CHI_M4_MOD8)
    assert is_primitive(principal_character(1))


def conductor_bruteforce(chi):
    """Smallest divisor N of the modulus that is an induced modulus for chi."""
    m = chi.modulus
    for n in sorted(d for d in range(1, m + 1) if m % d == 0):
        ok = True
        for a in range(1, m + 1):
            if gcd(a, m) != 1:
                continue
            b = a + n
            while gcd(b, m) != 1:
                b += n
            if char_value(chi, a) != char_value(chi, b):
                ok = False
                break
        if ok:
            return n
    return m


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 8, 12, 15, 16, 21, 24, 40, 45, 56, 60])
def test_conductor_matches_divisor_search(m):
    for chi in all_quadratic_characters(m):
        assert conductor(chi) == conductor_bruteforce(chi)


@pytest.mark.parametrize("m", [3, 4, 5, 8, 12, 15, 16, 24, 36, 40])
def test_characters_are_homomorphisms(m):
    units = [a for a in range(1, m + 1) if gcd(a, m) == 1]
    for chi in all_quadratic_characters(m):
        for a in units:
            for b in units:
                assert char_value(chi, a * b) == char_value(chi, a) * char_value(chi, b)


def test_generator_values_are_the_stored_signs():
    for m in (3, 4, 8, 12, 15, 24, 40, 105):
        gens = unit_group_generators(m)
        for chi in all_quadratic_characters(m):
            assert values_at(chi, gens) == chi.signs


def test_kronecker_to_dirichlet_examples():
    assert kronecker_to_dirichlet(8) == CHI_8
    chi = kronecker_to_dirichlet(-4)
    assert chi.modulus == 4 and values_at(chi, (1, 3)) == (1, -1)
    assert kronecker_to_dirichlet(1) == principal_character(1)


@given(discriminants)
def test_kronecker_to_dirichlet_is_primitive_with_conductor_abs_d(d):
    chi = kronecker_to_dirichlet(d)
    assert chi.modulus == abs(d)
    assert conductor(chi) == abs(d)
    assert is_primitive(chi)


@given(discriminants, st.integers(1, 2000))
def test_kronecker_to_dirichlet_matches_symbol_on_positives(d, n):
    if gcd(n, d) == 1:
        assert char_value(kronecker_to_dirichlet(d), n) == kronecker(d, n)


@given(discriminants, st.integers(-2000, -1))
def test_character_vs_symbol_at_negatives(d, n):
    if gcd(n, d) != 1:
        return
    chi = kronecker_to_dirichlet(d)
    expected = kronecker(d, n) * (kronecker_infinity(n) if d < 0 else 1)
    assert char_value(chi, n) == expected


def test_dirichlet_to_kronecker_examples():
    assert dirichlet_to_kronecker(CHI_8) == 8
    assert dirichlet_to_kronecker(CHI_M8) == -8
    chi3 = QuadraticCharacter(3, (-1,))
    d = dirichlet_to_kronecker(chi3)
    assert d == -3
    for n in range(1, 101):
        if gcd(n, 3) == 1:
            assert kronecker(-3, n) == char_value(chi3, n)


def test_dirichlet_to_kronecker_rejects_imprimitive():
    with pytest.raises(ValueError, match="primitive"):
        dirichlet_to_kronecker(CHI_M4_MOD8)
    with pytest.raises(ValueError, match="primitive"):
        dirichlet_to_kronecker(principal_character(12))


def test_principal_mod_1_maps_to_unit_discriminant():
    assert dirichlet_to_kronecker(principal_character(1)) == 1


@given(discriminants)
def test_round_trip_discriminant_to_character(d):
    assert dirichlet_to_kronecker(kronecker_to_dirichlet(d)) == d


@settings(max_examples=40)
@given(st.integers(1, 300))
def test_round_trip_character_to_discriminant(m):
    for chi in all_quadratic_characters(m):
        if not is_primitive(chi):
            continue
        d = dirichlet_to_kronecker(chi)
        assert abs(d) == m
        back = kronecker_to_dirichlet(d)
        assert back == chi
        assert chars_equivalent(back, chi)


def test_primitive_core_is_equivalent_and_primitive():
    for m in (8, 12, 24, 45, 40, 72, 105):
        for chi in all_quadratic_characters(m):
            core = primitive_core(chi)
            assert is_primitive(core)
            assert core.modulus == conductor(chi)
            assert chars_equivalent(core, chi)


def test_primitive_character_count_matches_fundamental_discriminants():
    for m in range(1, 151):
        primitive = sum(1 for chi in all_quadratic_characters(m) if is_primitive(chi))
        fundamentals = sum(1 for d in (m, -m) if d % 4 in (0, 1) and is_fundamental(d))
        assert primitive == fundamentals, m


def minimal_period_bruteforce(d, window=4):
    """Minimal period of n -> kronecker(d, n) on 1..window*|d|."""
    m = abs(d)
    values = [kronecker(d, n) for n in range(1, window * m + 1)]
    for period in range(1, 2 * m + 1):
        if all(values[i] == values[i + period] for i in range(len(values) - period)):
            return period
    raise AssertionError("no period found")


def test_kronecker_character_minimal_period_is_abs_d():
    for d in (5, -3, 8, -4, -8, 13, -15, 21, 40, -84, 60):
        assert minimal_period_bruteforce(d) == abs(d)


def test_empirical_periods_are_multiples_of_the_conductor():
    for d in (5, -3, 8, -4, 13, -20):
        m = abs(d)
        values = [kronecker(d, n) for n in range(1, 6 * m + 1)]
        periods = [
            p
            for p in range(1, 3 * m + 1)
            if all(values[i] == values[i + p] for i in range(len(values) - p))
        ]
        assert all(p % m == 0 for p in periods)


def test_field_conductor_examples():
    assert field_conductor(-4) == 4
    assert field_conductor(8) == 8
    with pytest.raises(ValueError):
        field_conductor(1)


def test_is_field_modular_examples():
    assert is_field_modular(8, 40) is True
    assert is_field_modular(8, 12) is False
    assert is_field_modular(1, 3) is True


def test_character_constructor_validation():
    with pytest.raises(ValueError):
        QuadraticCharacter(8, (1,))  # wrong arity
    with pytest.raises(ValueError):
        QuadraticCharacter(8, (1, 2))  # not a sign
    with pytest.raises(ValueError):
        QuadraticCharacter(0, ())
