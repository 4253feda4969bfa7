"""Range verification sweeps over discriminants, with optional process parallelism.

Each sweep returns the items checked and a list of human-readable failure
strings (expected empty).  Workers are pure, so results are emitted in the
input order regardless of how many processes ran them.
"""

import multiprocessing
import time
from dataclasses import dataclass, field

from .characters import (
    all_quadratic_characters,
    chars_equivalent,
    conductor,
    dirichlet_to_kronecker,
    is_primitive,
    kronecker_to_dirichlet,
)
from .discriminants import is_fundamental, is_squarefree
from .forms import narrow_class_group
from .genus import (
    class_number_parity_is_odd,
    odd_class_number,
    quartic_splitting_factorizations,
    verify_principal_genus,
)


@dataclass
class SweepResult:
    kind: str
    bound: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures


def fundamental_discriminants(bound: int):
    """All fundamental discriminants d != 1 with |d| <= bound, ascending in (|d|, d)."""
    for n in range(2, bound + 1):
        for d in (-n, n):
            if d % 4 in (0, 1) and is_fundamental(d):
                yield d


def squarefree_integers(bound: int):
    """All squarefree m with 1 < |m| <= bound, ascending in (|m|, m)."""
    for n in range(2, bound + 1):
        for m in (-n, n):
            if is_squarefree(m):
                yield m


def _check_pgt(d: int) -> str | None:
    report = verify_principal_genus(d)
    if report.ok:
        return None
    return (
        f"pgt failed at {d}: kernel={report.kernel_size} squares={report.squares_size} "
        f"image={report.image_size} expected_image={2 ** (report.t - 1)}"
    )


def _check_dirichlet_disc(d: int) -> str | None:
    chi = kronecker_to_dirichlet(d)
    if not is_primitive(chi):
        return f"character of {d} is imprimitive (conductor {conductor(chi)})"
    back = dirichlet_to_kronecker(chi)
    if back != d:
        return f"round trip failed: {d} -> mod {chi.modulus} -> {back}"
    return None


def _check_dirichlet_modulus(m: int) -> str | None:
    for chi in all_quadratic_characters(m):
        if not is_primitive(chi):
            continue
        d = dirichlet_to_kronecker(chi)
        if abs(d) != m:
            return f"conductor mismatch at modulus {m}: got discriminant {d}"
        if not chars_equivalent(kronecker_to_dirichlet(d), chi):
            return f"round trip failed for a character mod {m} (discriminant {d})"
    return None


def _check_theorem1(m: int) -> str | None:
    claimed = odd_class_number(m)
    computed = class_number_parity_is_odd(m)
    if claimed != computed:
        return f"parity mismatch at m={m}: classifier says odd={claimed}, groups say odd={computed}"
    return None


def _check_redei(d: int) -> str | None:
    has_pair = bool(quartic_splitting_factorizations(d))
    group = narrow_class_group(d)
    has_order_4 = any(v % 4 == 0 for v in group.elementary_divisors)
    if has_pair != has_order_4:
        return (
            f"quartic criterion mismatch at {d}: splittings nonempty={has_pair}, "
            f"order-4 element exists={has_order_4}"
        )
    return None


def _run(kind: str, bound: int, items, worker, jobs: int = 1) -> SweepResult:
    start = time.perf_counter()
    result = SweepResult(kind=kind, bound=bound)
    items = list(items)
    if jobs > 1:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            outcomes = pool.map(worker, items, chunksize=64)
    else:
        outcomes = map(worker, items)
    for msg in outcomes:
        result.checked += 1
        if msg is not None:
            result.failures.append(msg)
    result.elapsed = time.perf_counter() - start
    return result


def verify_pgt_range(bound: int, jobs: int = 1) -> SweepResult:
    return _run("pgt", bound, fundamental_discriminants(bound), _check_pgt, jobs)


def verify_dirichlet_lemma_range(
    disc_bound: int, conductor_bound: int | None = None, jobs: int = 1
) -> SweepResult:
    if conductor_bound is None:
        conductor_bound = disc_bound
    result = _run(
        "dirichlet-lemma",
        disc_bound,
        fundamental_discriminants(disc_bound),
        _check_dirichlet_disc,
        jobs,
    )
    part2 = _run(
        "dirichlet-lemma",
        conductor_bound,
        range(1, conductor_bound + 1),
        _check_dirichlet_modulus,
        jobs,
    )
    result.checked += part2.checked
    result.failures.extend(part2.failures)
    result.elapsed += part2.elapsed
    return result


def verify_theorem1_range(bound: int, jobs: int = 1) -> SweepResult:
    return _run("theorem1", bound, squarefree_integers(bound), _check_theorem1, jobs)


def verify_redei_range(bound: int, jobs: int = 1) -> SweepResult:
    return _run("redei", bound, fundamental_discriminants(bound), _check_redei, jobs)


SWEEPS = {
    "pgt": verify_pgt_range,
    "dirichlet-lemma": verify_dirichlet_lemma_range,
    "theorem1": verify_theorem1_range,
    "redei": verify_redei_range,
}
