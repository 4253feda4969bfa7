"""Genus fields, genus characters, and the classical verifications built on them.

Fields are handled as radicand lists: all statements here reduce to
multiplicative combinatorics of prime discriminants plus symbol values on
class representatives.
"""

from dataclasses import dataclass

from .discriminants import (
    check_discriminant,
    disc_of_sqrt,
    factor_int,
    factor_prime_discriminants,
    is_prime,
    is_squarefree,
    squarefree_kernel,
)
from .forms import (
    BinaryQuadraticForm,
    fundamental_unit_norm,
    narrow_class_group,
    represented_value_coprime_to,
)
from .symbols import Splitting, kronecker, splitting_type


@dataclass(frozen=True)
class GenusFieldDescription:
    """Strict genus field (as prime discriminants) and ordinary genus field (as radicands)."""

    discriminant: int
    strict_generators: tuple[int, ...]
    ordinary_radicands: tuple[int, ...]

    @property
    def strict_radicands(self) -> tuple[int, ...]:
        return tuple(sorted(squarefree_kernel(f) for f in self.strict_generators))

    @property
    def strict_degree(self) -> int:
        return 2 ** len(self.strict_generators)


def genus_field(d: int) -> GenusFieldDescription:
    """Both genus fields of the quadratic field of discriminant d."""
    check_discriminant(d)
    if d == 1:
        raise ValueError("d = 1 names no quadratic field")
    factors = factor_prime_discriminants(d).factors
    if d < 0:
        ordinary = tuple(sorted(squarefree_kernel(f) for f in factors))
    else:
        negatives = [f for f in factors if f < 0]
        positives = [f for f in factors if f > 0]
        radicands = [squarefree_kernel(negatives[0] * f) for f in negatives[1:]]
        radicands += [squarefree_kernel(f) for f in positives]
        ordinary = tuple(sorted(radicands))
    return GenusFieldDescription(d, factors, ordinary)


def genus_field_strict(d: int) -> tuple[int, ...]:
    """Prime discriminants whose square roots generate the strict genus field."""
    return genus_field(d).strict_generators


def genus_field_ordinary(d: int) -> tuple[int, ...]:
    """Radicands generating the ordinary genus field (the maximal real subfield)."""
    return genus_field(d).ordinary_radicands


def genus_character(d: int, j: int, cls: BinaryQuadraticForm) -> int:
    """Value of the j-th genus character (1-based, canonical factor order) on a class."""
    factors = factor_prime_discriminants(d).factors
    if not 1 <= j <= len(factors):
        raise ValueError(f"genus character index {j} out of range 1..{len(factors)}")
    if cls.discriminant() != d:
        raise ValueError("class representative has the wrong discriminant")
    v = represented_value_coprime_to(cls, abs(d))
    return kronecker(factors[j - 1], v)


def genus_character_vector(d: int, cls: BinaryQuadraticForm) -> tuple[int, ...]:
    """All genus character values on a class; their product is always +1."""
    factors = factor_prime_discriminants(d).factors
    if cls.discriminant() != d:
        raise ValueError("class representative has the wrong discriminant")
    v = represented_value_coprime_to(cls, abs(d))
    return tuple(kronecker(f, v) for f in factors)


def number_of_genera(d: int) -> int:
    """2^(t-1) for t prime discriminant factors; the size of the image of the character map."""
    check_discriminant(d)
    if d == 1:
        raise ValueError("d = 1 names no quadratic field")
    t = factor_prime_discriminants(d).t
    return 2 ** (t - 1)


@dataclass(frozen=True)
class PrincipalGenusReport:
    """Outcome of checking the principal genus exact sequence on one discriminant."""

    discriminant: int
    h_plus: int
    t: int
    squares_size: int
    kernel_size: int
    image_size: int
    kernel_equals_squares: bool
    image_size_is_2_pow_t_minus_1: bool
    image_products_trivial: bool

    @property
    def ok(self) -> bool:
        return (
            self.kernel_equals_squares
            and self.image_size_is_2_pow_t_minus_1
            and self.image_products_trivial
        )


def verify_principal_genus(d: int) -> PrincipalGenusReport:
    """Check kernel(X) = squares, |image(X)| = 2^(t-1), and trivial coordinate products."""
    group = narrow_class_group(d)
    t = factor_prime_discriminants(d).t
    vectors = {f: genus_character_vector(d, f) for f in group.elements}
    squares = group.squares()
    kernel = frozenset(f for f, vec in vectors.items() if all(v == 1 for v in vec))
    image = set(vectors.values())
    products_ok = True
    for vec in image:
        prod = 1
        for v in vec:
            prod *= v
        if prod != 1:
            products_ok = False
    return PrincipalGenusReport(
        discriminant=d,
        h_plus=group.order,
        t=t,
        squares_size=len(squares),
        kernel_size=len(kernel),
        image_size=len(image),
        kernel_equals_squares=kernel == squares,
        image_size_is_2_pow_t_minus_1=len(image) == 2 ** (t - 1),
        image_products_trivial=products_ok,
    )


def odd_class_number(m: int) -> bool:
    """Classify (by shape of m alone) whether the field generated by sqrt(m) has odd class number.

    Negative: m in {-1, -2} or m = -q for a prime q = 3 mod 4.  Positive:
    m prime, or m = pq for distinct primes with q = 3 mod 4 and p = 2 or
    p = 3 mod 4.
    """
    if m in (0, 1):
        raise ValueError("m must be a squarefree integer other than 0 and 1")
    if not is_squarefree(m):
        raise ValueError(f"{m} is not squarefree")
    if m < 0:
        if m in (-1, -2):
            return True
        q = -m
        return is_prime(q) and q % 4 == 3
    if is_prime(m):
        return True
    fac = factor_int(m)
    if len(fac) != 2:
        return False
    p, q = fac[0][0], fac[1][0]
    if p % 4 == 3 and q % 4 == 3:
        return True
    return p == 2 and q % 4 == 3


@dataclass(frozen=True)
class QuarticSplitting:
    """Coprime factorization d = d1 * d2 whose prime divisors split across the pair."""

    d1: int
    d2: int


def _splits_everywhere(d_other: int, d_part: int) -> bool:
    return all(
        splitting_type(d_other, p) is Splitting.SPLIT for p, _ in factor_int(d_part)
    )


def quartic_splitting_factorizations(d: int) -> list[QuarticSplitting]:
    """Nontrivial coprime factorizations d = d1*d2 with mutual complete splitting.

    Each pair attests a cyclic quartic extension, unramified at all finite
    primes, of the field of discriminant d; the trivial pair (1, d) is
    excluded here and only enters quartic_splitting_count_with_trivial.
    """
    check_discriminant(d)
    if d == 1:
        raise ValueError("d = 1 names no quadratic field")
    factors = factor_prime_discriminants(d).factors
    t = len(factors)
    found = []
    for mask in range(1, 2 ** (t - 1)):
        d1, d2 = 1, 1
        for i, f in enumerate(factors):
            if mask >> i & 1:
                d1 *= f
            else:
                d2 *= f
        if abs(d1) > abs(d2):
            d1, d2 = d2, d1
        if _splits_everywhere(d2, d1) and _splits_everywhere(d1, d2):
            found.append(QuarticSplitting(d1, d2))
    found.sort(key=lambda s: (abs(s.d1), s.d1))
    return found


def quartic_splitting_count_with_trivial(d: int) -> int:
    """Number of passing factorizations including (1, d); equals 2^(4-rank of Cl+)."""
    return len(quartic_splitting_factorizations(d)) + 1


def class_number_parity_is_odd(m: int) -> bool:
    """Parity of the usual class number, computed from the narrow group and the unit norm."""
    if m in (0, 1):
        raise ValueError("m must be a squarefree integer other than 0 and 1")
    if not is_squarefree(m):
        raise ValueError(f"{m} is not squarefree")
    d = disc_of_sqrt(m)
    h_plus = narrow_class_group(d).order
    if m < 0:
        return h_plus % 2 == 1
    h = h_plus if fundamental_unit_norm(m) == -1 else h_plus // 2
    return h % 2 == 1
