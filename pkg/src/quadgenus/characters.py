"""Quadratic Dirichlet characters and their correspondence with Kronecker symbols.

A character mod m is stored by its values (+/-1) on a canonical generating
set of the unit group mod m: for the 2-part, -1 and then 5 (when 8 | m),
or just -1 (when the 2-part is 4); for each odd prime power, a fixed
primitive root.  Every sign assignment extends to a homomorphism because
all canonical generators have even order.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm

from .discriminants import check_discriminant, factor_int, factor_prime_discriminants
from .symbols import kronecker


class InternalCheckError(RuntimeError):
    """A consistency check that should be unreachable has failed."""


@lru_cache(maxsize=None)
def _components(m: int) -> tuple[tuple, ...]:
    """Evaluation data for the cyclic pieces of (Z/mZ)^x, 2-part first."""
    comps = []
    for p, e in factor_int(m):
        q = p**e
        if p == 2:
            if e == 1:
                continue
            comps.append(("four", q) if e == 2 else ("eight", q))
        else:
            comps.append(("odd", q, p, (p - 1) * p ** (e - 1) // 2))
    return tuple(comps)


def generator_count(m: int) -> int:
    """Number of canonical generators of the unit group mod m."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    n = 0
    for comp in _components(m):
        n += 2 if comp[0] == "eight" else 1
    return n


def _primitive_root(p: int, e: int) -> int:
    phi = p - 1
    prime_divisors = [q for q, _ in factor_int(phi)]
    g = 2
    while any(pow(g, phi // q, p) == 1 for q in prime_divisors):
        g += 1
    if e > 1 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


def unit_group_generators(m: int) -> tuple[int, ...]:
    """Canonical generators of (Z/mZ)^x as integers in [1, m)."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    if m <= 2:
        return ()

    def lift(residue: int, q: int) -> int:
        # CRT: the unit congruent to residue mod q and to 1 mod m/q
        rest = m // q
        if rest == 1:
            return residue % m
        k = ((residue - 1) * pow(rest, -1, q)) % q
        return (1 + rest * k) % m

    gens = []
    for p, e in factor_int(m):
        q = p**e
        if p == 2:
            if e == 1:
                continue
            gens.append(lift(q - 1, q))
            if e >= 3:
                gens.append(lift(5, q))
        else:
            gens.append(lift(_primitive_root(p, e), q))
    return tuple(gens)


@dataclass(frozen=True)
class QuadraticCharacter:
    """A quadratic Dirichlet character mod `modulus`, as signs on the canonical generators."""

    modulus: int
    signs: tuple[int, ...]

    def __post_init__(self):
        if self.modulus <= 0:
            raise ValueError("modulus must be positive")
        expected = generator_count(self.modulus)
        if len(self.signs) != expected:
            raise ValueError(
                f"modulus {self.modulus} needs {expected} generator values, got {len(self.signs)}"
            )
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("generator values must be +1 or -1")

    def __call__(self, n: int) -> int:
        return char_value(self, n)


def principal_character(m: int) -> QuadraticCharacter:
    return QuadraticCharacter(m, (1,) * generator_count(m))


def all_quadratic_characters(m: int):
    """All 2^k quadratic characters mod m, principal first, in sign-vector order."""
    for signs in itertools.product((1, -1), repeat=generator_count(m)):
        yield QuadraticCharacter(m, signs)


def char_value(chi: QuadraticCharacter, n: int) -> int:
    """Value of chi at n: 0 off the units, otherwise the homomorphism value at n mod m."""
    m = chi.modulus
    if m == 1:
        return 1
    x = n % m
    if gcd(x, m) != 1:
        return 0
    v = 1
    i = 0
    for comp in _components(m):
        q = comp[1]
        r = x % q
        if comp[0] == "odd":
            if pow(r, comp[3], q) != 1:
                v *= chi.signs[i]
            i += 1
        elif comp[0] == "four":
            if r % 4 == 3:
                v *= chi.signs[i]
            i += 1
        else:
            flipped = r % 4 == 3
            if flipped:
                v *= chi.signs[i]
                r = q - r
            if r % 8 != 1:
                v *= chi.signs[i + 1]
            i += 2
    return v


def chars_equivalent(chi1: QuadraticCharacter, chi2: QuadraticCharacter) -> bool:
    """True iff the characters agree on every integer coprime to both moduli."""
    m1, m2 = chi1.modulus, chi2.modulus
    period = lcm(m1, m2)
    mm = m1 * m2
    return all(
        char_value(chi1, n) == char_value(chi2, n)
        for n in range(1, period + 1)
        if gcd(n, mm) == 1
    )


def _local_conductors(chi: QuadraticCharacter) -> list[int]:
    out = []
    i = 0
    for comp in _components(chi.modulus):
        if comp[0] == "odd":
            out.append(comp[2] if chi.signs[i] == -1 else 1)
            i += 1
        elif comp[0] == "four":
            out.append(4 if chi.signs[i] == -1 else 1)
            i += 1
        else:
            s_neg, s_five = chi.signs[i], chi.signs[i + 1]
            if s_five == -1:
                out.append(8)
            elif s_neg == -1:
                out.append(4)
            else:
                out.append(1)
            i += 2
    return out


def conductor(chi: QuadraticCharacter) -> int:
    """Smallest modulus with respect to which chi is defined."""
    n = 1
    for f in _local_conductors(chi):
        n *= f
    return n


def is_primitive(chi: QuadraticCharacter) -> bool:
    return conductor(chi) == chi.modulus


def primitive_core(chi: QuadraticCharacter) -> QuadraticCharacter:
    """The primitive character mod conductor(chi) equivalent to chi."""
    n = conductor(chi)
    if n == chi.modulus:
        return chi
    signs = []
    i = 0
    for comp in _components(chi.modulus):
        if comp[0] == "odd":
            if chi.signs[i] == -1:
                signs.append(-1)
            i += 1
        elif comp[0] == "four":
            if chi.signs[i] == -1:
                signs.append(-1)
            i += 1
        else:
            s_neg, s_five = chi.signs[i], chi.signs[i + 1]
            if s_five == -1:
                signs.extend((s_neg, -1))
            elif s_neg == -1:
                signs.append(-1)
            i += 2
    return QuadraticCharacter(n, tuple(signs))


def kronecker_to_dirichlet(d: int) -> QuadraticCharacter:
    """The primitive character mod |d| that matches (d/n) on positive n coprime to d."""
    check_discriminant(d)
    if d == 1:
        return principal_character(1)
    m = abs(d)
    even_factor = 1
    for f in factor_prime_discriminants(d).factors:
        if f % 2 == 0:
            even_factor = f
    signs = []
    for p, _ in factor_int(m):
        if p == 2:
            if even_factor == -4:
                signs.append(-1)
            elif even_factor == 8:
                signs.extend((1, -1))
            else:  # -8
                signs.extend((-1, -1))
        else:
            signs.append(-1)
    return QuadraticCharacter(m, tuple(signs))


def dirichlet_to_kronecker(chi: QuadraticCharacter) -> int:
    """Fundamental discriminant d with (d/n) = chi(n) on positive n coprime to d.

    Only primitive characters qualify; the local pieces map to prime
    discriminants (odd p to (-1)^((p-1)/2) p, the 2-part to -4, 8 or -8)
    whose product is d.
    """
    if not is_primitive(chi):
        raise ValueError(
            f"character mod {chi.modulus} has conductor {conductor(chi)}; "
            "only primitive characters come from Kronecker symbols"
        )
    m = chi.modulus
    if m == 1:
        return 1
    d = 1
    i = 0
    for comp in _components(m):
        if comp[0] == "odd":
            p = comp[2]
            d *= p if p % 4 == 1 else -p
            i += 1
        elif comp[0] == "four":
            d *= -4
            i += 1
        else:
            s_neg = chi.signs[i]
            d *= 8 if s_neg == 1 else -8
            i += 2
    check_discriminant(d)
    # Agreement on the generators forces agreement everywhere (both sides
    # are homomorphisms on the units mod m).
    for g, s in zip(unit_group_generators(m), chi.signs):
        if kronecker(d, g) != s:
            raise InternalCheckError(
                f"candidate discriminant {d} disagrees with the character at {g}"
            )
    return d


def field_conductor(d: int) -> int:
    """Smallest N with the field of discriminant d inside the N-th cyclotomic field."""
    check_discriminant(d)
    if d == 1:
        raise ValueError("d = 1 names no quadratic field")
    return abs(d)


def is_field_modular(d: int, n: int) -> bool:
    """True iff the field of discriminant d lies in the n-th cyclotomic field."""
    check_discriminant(d)
    if n <= 0:
        raise ValueError("cyclotomic level must be positive")
    return n % abs(d) == 0
