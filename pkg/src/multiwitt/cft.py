"""Finite quotients of the truncated groups: invariant factors and censuses.

At truncation d over F_q the group is generated by the binomials
(1 - c t^nu) with c running over an F_p-basis of F_q and nu over the
exponents below d whose gcd is prime to p; such a generator has order
p^s(nu) where s(nu) counts the i >= 0 with p^i |nu| < d, because raising
a binomial to the p-th power just dilates its exponent.  Collecting these
prime powers gives the invariant factors directly; a brute-force routine
recovers the same data from nothing but the multiplication, and the two
must agree on every configuration small enough to enumerate.

The one-variable case at truncation m doubles as the unit-group quotient
(1 + u k[[u]]) / (1 + u^m k[[u]]) attached to the point at infinity on the
projective line, of order q^(m-1).

The Lang census enumerates the group over an extension F_(q^s), applies
the Frobenius-over-identity map, and confirms that its kernel is exactly
the F_q-rational subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidTruncation, NotAbelian, NotClosed, TooLarge
from .ring import CoeffRing
from .series import exponents_below
from .witt import (
    WittElement,
    enumerate_witt_elements,
    frobenius_witt,
    lang_map,
    witt_add,
)

BRUTE_FORCE_LIMIT = 10**4
CENSUS_LIMIT = 10**6
PAIR_CHECK_LIMIT = 4 * 10**4


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Invariant factors ascending, total order, and one witness per factor."""

    invariant_factors: tuple
    order: int
    witnesses: tuple = field(default=(), compare=False)

    def to_json_dict(self):
        return {"factors": list(self.invariant_factors), "order": self.order}


def generator_order_exponent(p: int, weight: int, d: int) -> int:
    """Number of i >= 0 with p^i * weight < d."""
    s = 0
    while weight * p**s < d:
        s += 1
    return s


def pi1_truncated(n: int, q: int, d: int, ring: CoeffRing | None = None) -> AbelianGroupStructure:
    """Structure of the truncated group over F_q in n variables."""
    if d < 2:
        raise InvalidTruncation("truncation level must be at least 2")
    ring = ring if ring is not None else CoeffRing.make(q)
    if ring.size != q or ring.nil != 1:
        raise InvalidTruncation("coefficients must form the field F_q")
    p, e = ring.p, ring.field.e
    gens = []
    exps = [nu for nu in exponents_below(n, d) if sum(nu) > 0]
    for nu in exps:
        g = 0
        for v in nu:
            from math import gcd

            g = gcd(g, v)
        if g % p == 0:
            continue
        s = generator_order_exponent(p, sum(nu), d)
        for b in range(e):
            c = p**b  # basis element x^b as a field index
            gens.append((p**s, WittElement.binomial(ring, n, d, nu, c)))
    gens.sort(key=lambda t: t[0])
    factors = tuple(o for o, _ in gens)
    order = q ** len(exps)
    prod = 1
    for f in factors:
        prod *= f
    if prod != order:
        raise AssertionError("generator orders do not account for the group order")
    return AbelianGroupStructure(factors, order, tuple(w for _, w in gens))


@dataclass(frozen=True)
class ModulusGroupDesc:
    """The quotient (1 + u k[[u]]) / (1 + u^m k[[u]]) at the infinite place."""

    q: int
    m: int
    order: int
    structure: AbelianGroupStructure

    def elements(self):
        ring = CoeffRing.make(self.q)
        if self.m < 2:
            return iter([WittElement.one(ring, 1, max(self.m, 1) + 1)])
        return enumerate_witt_elements(ring, 1, self.m)


def modulus_group(q: int, m: int) -> ModulusGroupDesc:
    if m < 1:
        raise InvalidTruncation("modulus multiplicity must be >= 1")
    if m == 1:
        return ModulusGroupDesc(q, 1, 1, AbelianGroupStructure((), 1, ()))
    s = pi1_truncated(1, q, m)
    return ModulusGroupDesc(q, m, s.order, s)


def brute_force_structure(elements, op) -> AbelianGroupStructure:
    """Recover invariant factors from an explicit finite abelian group.

    Element orders come from iteration; the factors are peeled greedily,
    splitting off a maximal-order cyclic subgroup and recursing on the
    quotient by its cosets.  The result is certified against the order.
    """
    elems = list(elements)
    if len(elems) > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"group of size {len(elems)} beyond brute-force limit")
    index = {x: i for i, x in enumerate(elems)}
    if len(index) != len(elems):
        raise NotClosed("duplicate elements in enumeration")

    identity = None
    for x in elems:
        y = op(x, x)
        if y not in index:
            raise NotClosed(f"product of {x!r} with itself left the set")
        if y == x:
            identity = x
            break
    if identity is None:
        raise NotClosed("no idempotent found, not a finite group")

    # commutativity check, exhaustive while affordable, sampled beyond
    if len(elems) ** 2 <= PAIR_CHECK_LIMIT:
        pairs = ((a, b) for i, a in enumerate(elems) for b in elems[i + 1 :])
    else:
        import random as _random

        rng = _random.Random(0)
        pairs = ((rng.choice(elems), rng.choice(elems)) for _ in range(2000))
    for a, b in pairs:
        ab = op(a, b)
        if ab not in index:
            raise NotClosed(f"product of {a!r} and {b!r} left the set")
        if ab != op(b, a):
            raise NotAbelian(f"{a!r} and {b!r} do not commute")

    def order_of(x):
        k, y = 1, x
        while y != identity:
            y = op(y, x)
            if y not in index:
                raise NotClosed(f"powers of {x!r} left the set")
            k += 1
        return k

    factors = []
    witnesses = []
    current = elems
    cur_identity = identity
    while len(current) > 1:
        orders = [(order_of(x), index[x]) for x in current]
        best_order, best_idx = max(orders, key=lambda t: (t[0], -t[1]))
        g = elems[best_idx]
        factors.append(best_order)
        witnesses.append(g)
        # partition into cosets of <g> by walking g-orbits
        rep_of = {}
        reps = []
        for x in current:
            if x in rep_of:
                continue
            orbit = [x]
            y = op(x, g)
            while y != x:
                orbit.append(y)
                y = op(y, g)
            rep = min(orbit, key=lambda z: index[z])
            for z in orbit:
                rep_of[z] = rep
            reps.append(rep)
        prev_op = op
        prev_rep = rep_of

        def op_q(a, b, _op=prev_op, _rep=prev_rep):
            return _rep[_op(a, b)]

        current = reps
        cur_identity = rep_of[cur_identity]
        op = op_q
        index = {x: index[x] for x in current}
        identity = cur_identity

    total = 1
    for f in factors:
        total *= f
    if total != len(elems):
        raise NotAbelian("factor product does not certify the group order")
    return AbelianGroupStructure(tuple(reversed(factors)), len(elems), tuple(reversed(witnesses)))


def witt_group_structure_brute(ring: CoeffRing, n: int, d: int) -> AbelianGroupStructure:
    """Brute-force oracle applied to the truncated group itself."""
    exps = [e for e in exponents_below(n, d) if sum(e) > 0]
    size = ring.size ** len(exps)
    if size > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"group of size {size} beyond brute-force limit")
    return brute_force_structure(list(enumerate_witt_elements(ring, n, d)), witt_add)


@dataclass(frozen=True)
class LangCensus:
    total: int
    kernel: int
    expected_kernel: int
    endomorphism_pairs_checked: int
    kernel_is_rational: bool

    @property
    def matches(self) -> bool:
        return self.kernel == self.expected_kernel and self.kernel_is_rational

    def to_json_dict(self):
        return {
            "total": self.total,
            "kernel": self.kernel,
            "expected": self.expected_kernel,
            "endomorphism_pairs_checked": self.endomorphism_pairs_checked,
            "kernel_is_rational": self.kernel_is_rational,
            "matches": self.matches,
        }


def lang_kernel_census(n: int, q: int, s: int, d: int, seed: int = 0) -> LangCensus:
    """Enumerate the group over F_(q^s), count the kernel of the Lang map,
    and verify the map is an endomorphism and the kernel is F_q-rational."""
    if d < 2:
        raise InvalidTruncation("truncation level must be at least 2")
    base = CoeffRing.make(q)
    big = CoeffRing.make(q**s)
    if big.p != base.p:
        raise InvalidTruncation("extension characteristic mismatch")
    exps = [e for e in exponents_below(n, d) if sum(e) > 0]
    total = big.size ** len(exps)
    if total > CENSUS_LIMIT:
        raise TooLarge(f"census of size {total} beyond limit")
    one = WittElement.one(big, n, d)
    kernel = 0
    kernel_rational = True
    members = []
    keep_all = total <= 2000
    for el in enumerate_witt_elements(big, n, d):
        if keep_all:
            members.append(el)
        if lang_map(el, q) == one:
            kernel += 1
            if any(big.rfrob(c, q) != c for c in el.series.terms.values()):
                kernel_rational = False

    import random as _random

    rng = _random.Random(seed)
    if keep_all and total * total <= PAIR_CHECK_LIMIT:
        pairs = [(a, b) for a in members for b in members]
    else:
        pairs = []
        for _ in range(min(1000, total * total)):
            a = _random_element(big, n, d, rng)
            b = _random_element(big, n, d, rng)
            pairs.append((a, b))
    for a, b in pairs:
        lhs = lang_map(witt_add(a, b), q)
        rhs = witt_add(lang_map(a, q), lang_map(b, q))
        if lhs != rhs:
            raise NotAbelian("Lang map failed to be an endomorphism")

    return LangCensus(total, kernel, q ** len(exps), len(pairs), kernel_rational)


def _random_element(ring, n, d, rng):
    from .witt import random_witt_element

    return random_witt_element(ring, n, d, rng)


def transition_surjective(ring: CoeffRing, n: int, d_from: int, d_to: int) -> bool:
    """Exhaustively confirm that truncation maps the larger quotient onto
    the smaller one."""
    if d_to > d_from:
        raise InvalidTruncation("target level must not exceed the source level")
    exps = [e for e in exponents_below(n, d_from) if sum(e) > 0]
    if ring.size ** len(exps) > BRUTE_FORCE_LIMIT:
        raise TooLarge("enumeration beyond limit")
    images = {el.truncate(d_to) for el in enumerate_witt_elements(ring, n, d_from)}
    targets = set(enumerate_witt_elements(ring, n, d_to))
    return images == targets
