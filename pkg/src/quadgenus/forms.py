"""Integral binary quadratic forms and the narrow class group of a discriminant.

Forms are primitive throughout.  Definite discriminants get the textbook
unique reduced representative; indefinite ones are handled through
reduction cycles, with class identity decided by cycle membership.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .discriminants import check_discriminant, factor_int, is_squarefree


@dataclass(frozen=True)
class BinaryQuadraticForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if gcd(gcd(self.a, self.b), self.c) != 1:
            raise ValueError(f"form ({self.a},{self.b},{self.c}) is not primitive")
        if self.discriminant() < 0 and self.a < 0:
            raise ValueError("negative definite forms are excluded; use a > 0")

    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def value(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def inverse(self) -> "BinaryQuadraticForm":
        """Representative of the inverse class."""
        return BinaryQuadraticForm(self.a, -self.b, self.c)

    def __repr__(self):
        return f"({self.a},{self.b},{self.c})"


def principal_form(d: int) -> BinaryQuadraticForm:
    """The identity class representative (1, d mod 2, (d mod 2 - d)/4) of discriminant d."""
    check_discriminant(d)
    if d == 1:
        raise ValueError("no forms of discriminant 1")
    b = d % 2
    return BinaryQuadraticForm(1, b, (b * b - d) // 4)


def _is_reduced_definite(a: int, b: int, c: int) -> bool:
    if not (abs(b) <= a <= c):
        return False
    if b < 0 and (abs(b) == a or a == c):
        return False
    return True


def _is_reduced_indefinite(a: int, b: int, c: int, d: int) -> bool:
    # 0 < b < sqrt(d) and sqrt(d) - b < 2|a| < sqrt(d) + b, exactly in integers
    if b <= 0 or b * b >= d:
        return False
    ta = 2 * abs(a)
    if (ta + b) ** 2 <= d:
        return False
    return ta <= b or (ta - b) ** 2 < d


def is_reduced(f: BinaryQuadraticForm) -> bool:
    d = f.discriminant()
    if d < 0:
        return _is_reduced_definite(f.a, f.b, f.c)
    return _is_reduced_indefinite(f.a, f.b, f.c, d)


def _rho_indefinite(a: int, b: int, c: int, d: int, root: int):
    # neighbouring form sharing the outer coefficient c
    ac = abs(c)
    if ac > root:
        r = (-b) % (2 * ac)
        if r > ac:
            r -= 2 * ac
    else:
        r = root - ((root + b) % (2 * ac))
    return c, r, (r * r - d) // (4 * c)


def reduce_form(f: BinaryQuadraticForm) -> BinaryQuadraticForm:
    """A reduced form properly equivalent to f.

    Unique for definite discriminants; for indefinite ones, some member of
    the reduction cycle of f's class.
    """
    d = f.discriminant()
    if d < 0:
        a, b, c = f.a, f.b, f.c
        while True:
            if b > a or b <= -a:
                b = (b + a) % (2 * a) - a  # shift b into (-a, a]
                if b == -a:
                    b = a
                c = (b * b - d) // (4 * a)
            if a > c:
                a, b, c = c, -b, a
                continue
            break
        if b < 0 and (a == c or -b == a):
            b = -b
        return BinaryQuadraticForm(a, b, c)
    root = isqrt(d)
    if root * root == d:
        raise ValueError(f"discriminant {d} is a square; no reduction cycle")
    a, b, c = f.a, f.b, f.c
    while not _is_reduced_indefinite(a, b, c, d):
        a, b, c = _rho_indefinite(a, b, c, d, root)
    return BinaryQuadraticForm(a, b, c)


def reduction_cycle(f: BinaryQuadraticForm) -> tuple[BinaryQuadraticForm, ...]:
    """The full cycle of reduced forms in f's class (indefinite discriminants)."""
    d = f.discriminant()
    if d < 0:
        raise ValueError("reduction cycles only exist for positive discriminants")
    start = reduce_form(f)
    root = isqrt(d)
    cycle = [start]
    a, b, c = _rho_indefinite(start.a, start.b, start.c, d, root)
    while (a, b, c) != (start.a, start.b, start.c):
        cycle.append(BinaryQuadraticForm(a, b, c))
        a, b, c = _rho_indefinite(a, b, c, d, root)
    return tuple(cycle)


def equivalent(f: BinaryQuadraticForm, g: BinaryQuadraticForm) -> bool:
    """Proper (narrow-sense) equivalence of two forms of the same discriminant."""
    d = f.discriminant()
    if g.discriminant() != d:
        raise ValueError("forms have different discriminants")
    if d < 0:
        return reduce_form(f) == reduce_form(g)
    return reduce_form(g) in reduction_cycle(f)


def _egcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _egcd3(a: int, b: int, c: int):
    # g = gcd(a,b,c) with g = ra + sb + tc
    g1, r1, s1 = _egcd(a, b)
    g, u, t = _egcd(g1, c)
    return g, u * r1, u * s1, t


def compose(f: BinaryQuadraticForm, g: BinaryQuadraticForm) -> BinaryQuadraticForm:
    """Gauss composition of form classes; the result comes back reduced."""
    disc = f.discriminant()
    if g.discriminant() != disc:
        raise ValueError("forms have different discriminants")
    a1, b1, c1 = f.a, f.b, f.c
    a2, b2, c2 = g.a, g.b, g.c
    s0 = (b1 + b2) // 2
    e, _, s, t = _egcd3(a1, a2, s0)
    a3 = a1 * a2 // (e * e)
    b3 = b2 + 2 * (a2 // e) * (s * (b1 - b2) // 2 - t * c2)
    c3 = (b3 * b3 - disc) // (4 * a3)
    return reduce_form(BinaryQuadraticForm(a3, b3, c3))


def reduced_forms(d: int) -> tuple[BinaryQuadraticForm, ...]:
    """All reduced primitive forms of fundamental discriminant d, sorted."""
    check_discriminant(d)
    if d == 1:
        raise ValueError("no forms of discriminant 1")
    out = []
    if d < 0:
        for a in range(1, isqrt(-d // 3) + 1):
            for b in range(-a + 1, a + 1):
                if (b - d) % 2:
                    continue
                num = b * b - d
                if num % (4 * a):
                    continue
                c = num // (4 * a)
                if c < a:
                    continue
                if b < 0 and a == c:
                    continue
                if gcd(gcd(a, b), c) != 1:
                    continue
                out.append(BinaryQuadraticForm(a, b, c))
    else:
        root = isqrt(d)
        b0 = 2 - d % 2
        for b in range(b0, root + 1, 2):
            nn = (d - b * b) // 4
            for aa in range(1, isqrt(nn) + 1):
                if nn % aa:
                    continue
                for a in {aa, nn // aa}:
                    for sa in (a, -a):
                        c = -nn // sa
                        if not _is_reduced_indefinite(sa, b, c, d):
                            continue
                        if gcd(gcd(sa, b), c) != 1:
                            continue
                        out.append(BinaryQuadraticForm(sa, b, c))
    return tuple(sorted(out, key=lambda f: (f.a, f.b, f.c)))


def _canonical_in_cycle(cycle) -> BinaryQuadraticForm:
    return min(cycle, key=lambda f: (abs(f.a), f.a, f.b))


class NarrowClassGroup:
    """The narrow class group of a fundamental discriminant, with explicit representatives.

    Classes are named by canonical reduced representatives; multiplication
    is Gauss composition followed by lookup of the representative.
    """

    def __init__(self, d: int):
        check_discriminant(d)
        if d == 1:
            raise ValueError("no class group for the unit discriminant")
        self.discriminant = d
        forms = reduced_forms(d)
        self._rep_of: dict[BinaryQuadraticForm, BinaryQuadraticForm] = {}
        if d < 0:
            self.elements = forms
            for f in forms:
                self._rep_of[f] = f
        else:
            reps = []
            remaining = set(forms)
            for f in forms:
                if f not in remaining:
                    continue
                cycle = reduction_cycle(f)
                rep = _canonical_in_cycle(cycle)
                reps.append(rep)
                for g in cycle:
                    self._rep_of[g] = rep
                    remaining.discard(g)
            self.elements = tuple(sorted(reps, key=lambda f: (abs(f.a), f.a, f.b)))
        self.identity = self._rep_of[reduce_form(principal_form(d))]
        self._orders: dict[BinaryQuadraticForm, int] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def class_of(self, f: BinaryQuadraticForm) -> BinaryQuadraticForm:
        """Canonical representative of f's class."""
        if f.discriminant() != self.discriminant:
            raise ValueError("form has the wrong discriminant")
        return self._rep_of[reduce_form(f)]

    def multiply(self, f: BinaryQuadraticForm, g: BinaryQuadraticForm) -> BinaryQuadraticForm:
        return self._rep_of[compose(f, g)]

    def power(self, f: BinaryQuadraticForm, k: int) -> BinaryQuadraticForm:
        if k < 0:
            return self.power(f.inverse(), -k)
        acc = self.identity
        base = self.class_of(f)
        while k:
            if k & 1:
                acc = self.multiply(acc, base)
            base = self.multiply(base, base)
            k >>= 1
        return acc

    def element_order(self, f: BinaryQuadraticForm) -> int:
        rep = self.class_of(f)
        if rep not in self._orders:
            k = 1
            cur = rep
            while cur != self.identity:
                cur = self.multiply(cur, rep)
                k += 1
            self._orders[rep] = k
        return self._orders[rep]

    def squares(self) -> frozenset:
        return frozenset(self.multiply(f, f) for f in self.elements)

    @property
    def elementary_divisors(self) -> tuple[int, ...]:
        """Invariant factors d1 | d2 | ... of the group (empty when trivial)."""
        h = self.order
        if h == 1:
            return ()
        orders = [self.element_order(f) for f in self.elements]
        per_prime: list[list[int]] = []
        for p, _ in factor_int(h):
            # #{x : x^(p^k) = 1} = p^(sum_i min(e_i, k)); the increments of the
            # exponent recover the partition (e_i) of the p-part.
            at_least = []  # at_least[k-1] = #{i : e_i >= k}
            prev = 0
            k = 1
            while True:
                pk = p**k
                m_k = _ilog(sum(1 for o in orders if pk % o == 0), p)
                if m_k == prev:
                    break
                at_least.append(m_k - prev)
                prev = m_k
                k += 1
            exps = []
            for kk in range(1, len(at_least) + 1):
                nxt = at_least[kk] if kk < len(at_least) else 0
                exps.extend([kk] * (at_least[kk - 1] - nxt))
            per_prime.append(sorted((p**e for e in exps), reverse=True))
        width = max(len(l) for l in per_prime)
        for l in per_prime:
            l.extend([1] * (width - len(l)))
        invariants = []
        for i in range(width):
            v = 1
            for l in per_prime:
                v *= l[i]
            if v > 1:
                invariants.append(v)
        return tuple(sorted(invariants))


def _ilog(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


@lru_cache(maxsize=2048)
def narrow_class_group(d: int) -> NarrowClassGroup:
    """Build (and cache) the narrow class group of the fundamental discriminant d."""
    return NarrowClassGroup(d)


def represented_value_coprime_to(f: BinaryQuadraticForm, m: int) -> int:
    """Smallest positive value of f coprime to m, swept over growing coordinate boxes."""
    if m <= 0:
        raise ValueError("modulus must be positive")
    best = None
    for box in range(1, 10000):
        for x in range(-box, box + 1):
            for y in range(-box, box + 1):
                if max(abs(x), abs(y)) != box:
                    continue
                v = f.value(x, y)
                if v > 0 and gcd(v, m) == 1 and (best is None or v < best):
                    best = v
        if best is not None:
            return best
    raise RuntimeError(f"no coprime value of {f} found; is the form primitive?")


def fundamental_unit_norm(d0: int) -> int:
    """Norm (+1 or -1) of the fundamental unit of the real field generated by sqrt(d0).

    Equals (-1)^(period of the continued fraction of sqrt(d0)).
    """
    if d0 <= 1:
        raise ValueError("need a squarefree integer > 1")
    if not is_squarefree(d0):
        raise ValueError(f"{d0} is not squarefree")
    a0 = isqrt(d0)
    m, dd, a = 0, 1, a0
    period = 0
    while a != 2 * a0:
        m = dd * a - m
        dd = (d0 - m * m) // dd
        a = (a0 + m) // dd
        period += 1
    return -1 if period % 2 else 1
