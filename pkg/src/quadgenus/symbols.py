"""Jacobi and Kronecker symbols, the sign symbol at infinity, and prime splitting."""

import enum

from .discriminants import check_discriminant, is_prime


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd n >= 1.

    Computed by binary quadratic reciprocity, so n is never factored.
    For prime n this is the Legendre symbol: 0 when n | a, +1 when a is
    a nonzero square mod n, -1 otherwise.
    """
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs an odd positive denominator, got {n}")
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def kronecker(d: int, n: int) -> int:
    """Kronecker symbol (d/n) for a discriminant d, extended multiplicatively.

    Negative n evaluates like |n|: the symbol depends only on the ideal
    (n), the sign being the business of kronecker_infinity.
    """
    check_discriminant(d)
    if n == 0:
        raise ValueError("Kronecker symbol undefined at 0")
    n = abs(n)
    result = 1
    if n % 2 == 0:
        if d % 2 == 0:
            return 0
        at_two = 1 if d % 8 in (1, 7) else -1
        while n % 2 == 0:
            n //= 2
            result *= at_two
    if n == 1:
        return result
    j = jacobi(d, n)
    return 0 if j == 0 else result * j


def kronecker_infinity(n: int) -> int:
    """Sign symbol: +1 for positive n, -1 for negative n."""
    if n == 0:
        raise ValueError("sign symbol undefined at 0")
    return 1 if n > 0 else -1


class Splitting(enum.Enum):
    SPLIT = "split"
    INERT = "inert"
    RAMIFIED = "ramified"


def splitting_type(d: int, p: int) -> Splitting:
    """How the rational prime p behaves in the quadratic field of discriminant d."""
    check_discriminant(d)
    if d == 1:
        raise ValueError("d = 1 names no quadratic field")
    if p <= 0 or not is_prime(p):
        raise ValueError(f"{p} is not a positive prime")
    k = kronecker(d, p)
    if k == 1:
        return Splitting.SPLIT
    if k == 0:
        return Splitting.RAMIFIED
    return Splitting.INERT
