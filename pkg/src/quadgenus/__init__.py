"""Exact genus theory of quadratic number fields.

Discriminant-group arithmetic and prime-discriminant factorization,
Jacobi/Kronecker symbols, quadratic Dirichlet characters with the
two-way correspondence to Kronecker symbols, narrow class groups built
from binary quadratic forms, and genus characters with machine checks of
the classical theorems they satisfy.
"""

from .characters import (
    InternalCheckError,
    QuadraticCharacter,
    all_quadratic_characters,
    char_value,
    chars_equivalent,
    conductor,
    dirichlet_to_kronecker,
    field_conductor,
    is_field_modular,
    is_primitive,
    kronecker_to_dirichlet,
    primitive_core,
    principal_character,
    unit_group_generators,
)
from .discriminants import (
    PrimeDiscriminantFactorization,
    disc_mul,
    disc_of_sqrt,
    factor_prime_discriminants,
    is_fundamental,
    is_prime_discriminant,
)
from .forms import (
    BinaryQuadraticForm,
    NarrowClassGroup,
    compose,
    equivalent,
    fundamental_unit_norm,
    narrow_class_group,
    principal_form,
    reduce_form,
    reduced_forms,
    reduction_cycle,
    represented_value_coprime_to,
)
from .genus import (
    GenusFieldDescription,
    PrincipalGenusReport,
    QuarticSplitting,
    genus_character,
    genus_character_vector,
    genus_field,
    genus_field_ordinary,
    genus_field_strict,
    number_of_genera,
    odd_class_number,
    quartic_splitting_count_with_trivial,
    quartic_splitting_factorizations,
    verify_principal_genus,
)
from .symbols import Splitting, jacobi, kronecker, kronecker_infinity, splitting_type

__all__ = [
    "BinaryQuadraticForm",
    "GenusFieldDescription",
    "InternalCheckError",
    "NarrowClassGroup",
    "PrimeDiscriminantFactorization",
    "PrincipalGenusReport",
    "QuadraticCharacter",
    "QuarticSplitting",
    "Splitting",
    "all_quadratic_characters",
    "char_value",
    "chars_equivalent",
    "compose",
    "conductor",
    "dirichlet_to_kronecker",
    "disc_mul",
    "disc_of_sqrt",
    "equivalent",
    "factor_prime_discriminants",
    "field_conductor",
    "fundamental_unit_norm",
    "genus_character",
    "genus_character_vector",
    "genus_field",
    "genus_field_ordinary",
    "genus_field_strict",
    "is_field_modular",
    "is_fundamental",
    "is_prime_discriminant",
    "is_primitive",
    "jacobi",
    "kronecker",
    "kronecker_infinity",
    "kronecker_to_dirichlet",
    "narrow_class_group",
    "number_of_genera",
    "odd_class_number",
    "primitive_core",
    "principal_character",
    "principal_form",
    "quartic_splitting_count_with_trivial",
    "quartic_splitting_factorizations",
    "reduce_form",
    "reduced_forms",
    "reduction_cycle",
    "represented_value_coprime_to",
    "splitting_type",
    "verify_principal_genus",
]
