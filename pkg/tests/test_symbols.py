import pytest
from hypothesis import given
import hypothesis.strategies as st

from quadgenus import (
    QuadraticCharacter,
    Splitting,
    char_value,
    jacobi,
    kronecker,
    kronecker_infinity,
    splitting_type,
)

import oracles
from conftest import discriminants, field_discriminants, nonzero

ODD_PRIMES = oracles.primes_below(300)[1:]


def test_jacobi_examples():
    assert jacobi(5, 11) == 1  # 4^2 = 5 mod 11
    assert jacobi(7, 1) == 1
    assert jacobi(-100, 1) == 1
    assert jacobi(3, 9) == 0


def test_jacobi_rejects_bad_denominator():
    for n in (0, -3, 4):
        with pytest.raises(ValueError):
            jacobi(5, n)


@given(st.integers(-500, 500), st.sampled_from(ODD_PRIMES))
def test_jacobi_matches_legendre_bruteforce(a, p):
    assert jacobi(a, p) == oracles.legendre_bruteforce(a, p)


@given(st.integers(-200, 200), st.integers(1, 99).map(lambda k: 2 * k + 1),
       st.integers(1, 99).map(lambda k: 2 * k + 1))
def test_jacobi_multiplicative_in_denominator(a, n, m):
    assert jacobi(a, n * m) == jacobi(a, n) * jacobi(a, m)


def test_kronecker_examples():
    assert kronecker(-4, 3) == -1
    assert kronecker(8, 2) == 0
    assert kronecker(840, 11) == 1
    assert kronecker(1, 17) == 1


def test_kronecker_rejects():
    with pytest.raises(ValueError):
        kronecker(5, 0)
    with pytest.raises(ValueError):
        kronecker(20, 5)  # 20 is not fundamental


@given(discriminants, nonzero)
def test_kronecker_ideal_convention(d, n):
    assert kronecker(d, n) == kronecker(d, -n)


@given(discriminants, st.integers(1, 3000), st.integers(1, 3000))
def test_kronecker_completely_multiplicative(d, m, n):
    assert kronecker(d, m * n) == kronecker(d, m) * kronecker(d, n)


@given(discriminants, st.integers(1, 5000), st.integers(0, 50))
def test_kronecker_periodic_mod_abs_d(d, n, k):
    assert kronecker(d, n) == kronecker(d, n + k * abs(d))


@given(discriminants, nonzero)
def test_kronecker_zero_locus(d, n):
    from math import gcd

    vanishes = kronecker(d, n) == 0
    assert vanishes == (gcd(n, d) != 1)


@given(st.integers(-1000, 1000).filter(lambda n: n % 2))
def test_kappa4_times_sign_is_the_mod4_character(n):
    chi = QuadraticCharacter(4, (-1,))
    assert kronecker(-4, n) * kronecker_infinity(n) == char_value(chi, n)


@given(discriminants, st.sampled_from(ODD_PRIMES))
def test_kronecker_euler_criterion_at_odd_primes(d, p):
    if d % p == 0:
        assert kronecker(d, p) == 0
    else:
        assert kronecker(d, p) == oracles.legendre_bruteforce(d, p)


def test_kronecker_infinity():
    assert kronecker_infinity(5) == 1
    assert kronecker_infinity(-5) == -1
    assert kronecker_infinity(-1) == -1
    with pytest.raises(ValueError):
        kronecker_infinity(0)


def test_splitting_examples():
    assert splitting_type(840, 2) is Splitting.RAMIFIED
    assert splitting_type(840, 11) is Splitting.SPLIT
    assert splitting_type(840, 13) is Splitting.INERT


def test_splitting_rejects():
    with pytest.raises(ValueError):
        splitting_type(1, 3)
    with pytest.raises(ValueError):
        splitting_type(5, 6)  # not a prime


@given(field_discriminants, st.sampled_from(oracles.primes_below(300)))
def test_splitting_matches_symbol(d, p):
    s = splitting_type(d, p)
    k = kronecker(d, p)
    assert (s, k) in {(Splitting.SPLIT, 1), (Splitting.RAMIFIED, 0), (Splitting.INERT, -1)}
