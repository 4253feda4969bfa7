"""Arithmetic on fundamental quadratic discriminants.

Nonzero integers that are either 1 (the unit) or a fundamental
discriminant form an elementary abelian 2-group under d1 * d2 =
discriminant of the field generated by sqrt(d1*d2).  Every such value
factors uniquely into prime discriminants.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt


@lru_cache(maxsize=65536)
def factor_int(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of |n| by trial division, as ((p, e), ...) with p ascending."""
    n = abs(n)
    if n <= 1:
        return ()
    out = []
    for p in (2, 3):
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
    p = 5
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 2 if p % 6 == 5 else 4
    if n > 1:
        out.append((n, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factor_int(n)
    return len(f) == 1 and f[0][1] == 1


def is_squarefree(n: int) -> bool:
    if n == 0:
        return False
    return all(e == 1 for _, e in factor_int(n))


def squarefree_kernel(n: int) -> int:
    """Largest squarefree divisor of n carrying its sign (kernel of a perfect square is 1)."""
    if n == 0:
        raise ValueError("0 has no squarefree kernel")
    k = -1 if n < 0 else 1
    for p, e in factor_int(n):
        if e % 2:
            k *= p
    return k


def is_fundamental(n: int) -> bool:
    """True iff n is 1 or a fundamental quadratic discriminant."""
    if n == 0:
        raise ValueError("0 is not a discriminant")
    if n == 1:
        return True
    r = n % 4
    if r == 1:
        return is_squarefree(n)
    if r == 0:
        m = n // 4
        return m % 4 in (2, 3) and is_squarefree(m)
    return False


def check_discriminant(n: int) -> int:
    """Validate n as a Discriminant value (1 or fundamental); return it unchanged."""
    if not is_fundamental(n):
        raise ValueError(f"{n} is not a fundamental discriminant")
    return n


def disc_of_sqrt(a: int) -> int:
    """Discriminant of the quadratic field generated by sqrt(a); 1 if a is a square.

    a need not be squarefree: only its squarefree kernel matters.
    """
    if a == 0:
        raise ValueError("sqrt(0) generates no quadratic extension")
    d0 = squarefree_kernel(a)
    if d0 == 1:
        return 1
    return d0 if d0 % 4 == 1 else 4 * d0


def disc_mul(d1: int, d2: int) -> int:
    """Group law on discriminants: the discriminant of Q(sqrt(d1*d2))."""
    check_discriminant(d1)
    check_discriminant(d2)
    return disc_of_sqrt(d1 * d2)


def is_prime_discriminant(n: int) -> bool:
    """True iff n is a fundamental discriminant with exactly one prime factor."""
    if n in (-4, 8, -8):
        return True
    if n > 0:
        return n % 4 == 1 and is_prime(n)
    return (-n) % 4 == 3 and is_prime(-n)


@dataclass(frozen=True)
class PrimeDiscriminantFactorization:
    """Canonical factorization of a discriminant into prime discriminants.

    factors holds negatives first, then positives, each block ordered by
    absolute value; r counts the negative factors, t all of them.
    """

    factors: tuple[int, ...]

    @property
    def r(self) -> int:
        return sum(1 for f in self.factors if f < 0)

    @property
    def t(self) -> int:
        return len(self.factors)

    def product(self) -> int:
        p = 1
        for f in self.factors:
            p *= f
        return p


def factor_prime_discriminants(d: int) -> PrimeDiscriminantFactorization:
    """Factor a discriminant into prime discriminants (empty for d = 1).

    Each odd prime p | d contributes p* = (-1)^((p-1)/2) * p; whatever is
    left over is the even factor and must be one of -4, 8, -8.
    """
    check_discriminant(d)
    if d == 1:
        return PrimeDiscriminantFactorization(())
    factors = []
    odd_product = 1
    for p, _ in factor_int(d):
        if p == 2:
            continue
        pstar = p if p % 4 == 1 else -p
        factors.append(pstar)
        odd_product *= pstar
    even_part = d // odd_product
    if even_part != 1:
        if even_part not in (-4, 8, -8):
            raise ValueError(f"even part {even_part} of {d} is not a prime discriminant")
        factors.append(even_part)
    factors.sort(key=lambda f: (f > 0, abs(f)))
    return PrimeDiscriminantFactorization(tuple(factors))
