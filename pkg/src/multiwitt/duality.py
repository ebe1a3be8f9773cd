"""Polynomial units and the two pairings between formal and full elements.

A formal element is an exact polynomial with constant term 1 whose other
coefficients are all nilpotent; these are exactly the polynomial units of
R[t_1..t_n] up to a scalar.  Against a full truncated element over the
base field there are three ways to pair:

  * algebraic: ring-multiply the two elements and sum the coefficients of
    the resulting polynomial (evaluation at t = 1);
  * geometric: truncate the second argument to a polynomial g' in the
    inverse variable, and take the product of f over the zeros of g' with
    multiplicity, computed as a resultant so nilpotent coefficients and
    roots in extension fields never need to be touched;
  * through components: split both sides into p-typical vectors, pair the
    vectors slotwise and recombine.  With the plain Artin-Hasse factor
    normalization the slot-j value enters through an inversion and a j-th
    power; the exponent -j below is forced by matching ghost components
    against the algebraic route.

All three must agree, and the test suite enforces it.  Truncation levels
are self-certified: every pairing is recomputed at the next level and a
mismatch raises UnstableTruncation.

Nilpotency bounds every computation: the coordinates of an exact
polynomial of degree D with nilpotent coefficients vanish beyond degree
D*(e-1), where e is the nilpotency order, because the coordinate at nu
lies in N^ceil(|nu|/D).
"""

from __future__ import annotations

from .errors import (
    InvalidTruncation,
    NotAUnit,
    NotNilpotent,
    ShapeMismatch,
    UnstableTruncation,
)
from .ptypical import pi_epsilon_inverse, pwitt_pair
from .ring import CoeffRing, RingElement
from .series import TruncatedSeries, content, primitive_part, zero_exp
from .unipoly import UnivariatePolynomial, resultant
from .witt import (
    WittCoordinates,
    WittElement,
    from_coordinates,
    mul_coordinate_families,
    one_var_order,
    witt_coordinates,
)


class FormalWittElement:
    """Exact polynomial, constant term 1, every other coefficient nilpotent."""

    __slots__ = ("series",)

    def __init__(self, series: TruncatedSeries):
        if not series.exact:
            raise ShapeMismatch("formal elements are exact polynomials")
        if series.constant_raw != series.ring.one:
            raise ShapeMismatch("constant term must be 1")
        ring = series.ring
        for e, c in series.terms.items():
            if sum(e) > 0 and not ring.is_nilpotent_raw(c):
                raise NotNilpotent(f"coefficient at {e} is not nilpotent")
        self.series = series

    @classmethod
    def from_elements(cls, ring: CoeffRing, n: int, coeffs: dict) -> "FormalWittElement":
        terms = {zero_exp(n): ring.one}
        deg = 1
        for e, c in coeffs.items():
            raw = c.raw if isinstance(c, RingElement) else int(c) % ring.size
            if raw:
                terms[tuple(e)] = raw
                deg = max(deg, sum(e) + 1)
        return cls(TruncatedSeries(ring, n, deg, terms, exact=True))

    @property
    def ring(self) -> CoeffRing:
        return self.series.ring

    @property
    def n(self) -> int:
        return self.series.n

    @property
    def degree(self) -> int:
        return self.series.support_degree()

    def __eq__(self, other):
        return isinstance(other, FormalWittElement) and self.series.terms == other.series.terms

    def __hash__(self):
        return hash(tuple(sorted(self.series.terms.items())))

    def __repr__(self):
        return repr(self.series).replace("<series", "<formal", 1)

    def mul(self, other: "FormalWittElement") -> "FormalWittElement":
        """Exact polynomial product (group addition on the formal side)."""
        if self.ring != other.ring or self.n != other.n:
            raise ShapeMismatch("operands have different shape")
        d = self.degree + other.degree + 1
        a = self.series.extend(d)
        b = other.series.extend(d)
        return FormalWittElement(a.mul(b))

    def coordinate_bound(self) -> int:
        """Exclusive bound for the support of the coordinate family."""
        if self.ring.nil == 1:
            return 1
        return self.degree * (self.ring.nil - 1) + 1

    def exact_coordinates(self) -> dict:
        """Complete coordinate family; round-trip verified."""
        bound = max(self.coordinate_bound(), self.degree + 1)
        extended = WittElement(self.series.extend(bound))
        coords = witt_coordinates(extended).coords
        back = from_coordinates(WittCoordinates(self.ring, self.n, bound, coords))
        if back != extended:
            raise UnstableTruncation("coordinate support exceeded its nilpotency bound")
        return coords

    def to_json_dict(self):
        return self.series.to_json_dict()


class UnitClass:
    """Class of a polynomial unit modulo constants, kept as the representative
    normalized to constant term 1."""

    __slots__ = ("representative",)

    def __init__(self, representative: FormalWittElement):
        self.representative = representative

    def __eq__(self, other):
        return isinstance(other, UnitClass) and self.representative == other.representative

    def __repr__(self):
        return f"<unit class of {self.representative!r}>"


def is_polynomial_unit(u: TruncatedSeries) -> bool:
    """Unit test for R[t_1..t_n]: unit constant term, nilpotent elsewhere."""
    ring = u.ring
    if not ring.is_unit_raw(u.constant_raw):
        return False
    return all(
        ring.is_nilpotent_raw(c) for e, c in u.terms.items() if sum(e) > 0
    )


def unit_class(u: TruncatedSeries) -> UnitClass:
    """Verify the unit criterion and divide out the constant term."""
    if not u.exact:
        raise ShapeMismatch("unit classes are formed from exact polynomials")
    ring = u.ring
    if not ring.is_unit_raw(u.constant_raw):
        raise NotAUnit("constant term is not a unit")
    inv0 = ring.rinv(u.constant_raw)
    scaled = u.scale_shift(inv0, zero_exp(u.n))
    for e, c in scaled.terms.items():
        if sum(e) > 0 and not ring.is_nilpotent_raw(c):
            raise NotAUnit(f"coefficient at {e} is not nilpotent")
    return UnitClass(FormalWittElement(scaled))


# pairing plumbing -----------------------------------------------------------


def _lift_to(ring: CoeffRing, g: WittElement) -> WittElement:
    """Carry an element over the base field into R (coefficients embed as the
    eps-degree-zero part, which the raw encoding makes the identity map)."""
    if g.ring == ring:
        return g
    if g.ring == CoeffRing(ring.field, 1):
        return WittElement(TruncatedSeries(ring, g.n, g.d, dict(g.series.terms)))
    raise ShapeMismatch("second argument must live over the ring or its field part")


def _grouped_exact_coords(f: FormalWittElement) -> dict:
    grouped = {}
    for exp, r in f.exact_coordinates().items():
        grouped.setdefault(primitive_part(exp), {})[content(exp)] = r
    return grouped


def _grouped_coords(g: WittElement) -> dict:
    grouped = {}
    for exp, r in witt_coordinates(g).coords.items():
        grouped.setdefault(primitive_part(exp), {})[content(exp)] = r
    return grouped


def _component_pair_value(ring: CoeffRing, fa: dict, gb: dict) -> int:
    """Sum of coefficients of the one-variable convolution product, computed
    at a window wide enough that no nonzero term can be discarded."""
    if not fa or not gb:
        return ring.one
    from math import gcd as _gcd

    # the product degree is at most the sum of g*lcm over nonzero factors
    dstar = 2
    for i, ai in fa.items():
        for j, bj in gb.items():
            g0 = _gcd(i, j)
            if ring.rmul(ring.rpow(ai, j // g0), ring.rpow(bj, i // g0)) != 0:
                dstar += g0 * (i * j // g0)
    prod = mul_coordinate_families(ring, dstar, fa, gb)
    if not prod.exact:
        raise UnstableTruncation("pairing window unexpectedly too small")
    acc = ring.zero
    for c in prod.terms.values():
        acc = ring.radd(acc, c)
    return acc


def cartier_pair(f: FormalWittElement, g: WittElement, d: int | None = None) -> RingElement:
    """Multiply f against g and evaluate at t = 1.

    The coordinates of g are consumed up to total degree d (default: one
    below its truncation); the value is recomputed with the bound raised by
    one and a change raises UnstableTruncation.
    """
    ring = f.ring
    if f.n != g.n:
        raise ShapeMismatch("arguments have different variable counts")
    g_r = _lift_to(ring, g)
    if d is None:
        d = g.d - 1
    if d < 1 or d + 1 > g.d:
        raise InvalidTruncation(f"need 1 <= d and d + 1 <= {g.d}")
    fam_f = _grouped_exact_coords(f)
    fam_g = _grouped_coords(g_r)

    def value(dcut: int) -> int:
        acc = ring.one
        for nu, fa in fam_f.items():
            gb = fam_g.get(nu)
            if not gb:
                continue
            kcut = one_var_order(dcut, sum(nu))
            gb_cut = {j: c for j, c in gb.items() if j < kcut}
            acc = ring.rmul(acc, _component_pair_value(ring, fa, gb_cut))
        return acc

    v1, v2 = value(d), value(d + 1)
    if v1 != v2:
        raise UnstableTruncation("pairing value changed between d and d + 1")
    return ring.from_raw(v1)


def _component_series(ring: CoeffRing, coords: dict, k: int) -> WittElement:
    return from_coordinates(
        WittCoordinates(ring, 1, k, {(i,): c for i, c in coords.items() if i < k})
    )


def geometric_pair(f: FormalWittElement, g: WittElement, m: int) -> RingElement:
    """Product of f over the zeros of a truncation of g, via resultants.

    g is read in the inverse variable u = 1/t; its truncation g' to degree
    below m is a polynomial whose zeros in the t-coordinate are the inverse
    roots, so reversing g' gives a monic polynomial with exactly those
    roots and Res(reverse(g'), f) multiplies f over them.  Stability is
    checked against level m + 1, so g must carry at least m + 1 terms.
    In several variables both sides split into one-variable components,
    each paired at level m capped by the precision the component carries;
    a component still unstable at its capped level raises.
    """
    ring = f.ring
    if f.n != g.n:
        raise ShapeMismatch("arguments have different variable counts")
    g_r = _lift_to(ring, g)
    if m < 1:
        raise InvalidTruncation("truncation level m must be >= 1")
    if f.n == 1:
        if m + 1 > g.d:
            raise InvalidTruncation(
                f"stability check needs the second argument known to degree {m + 1}"
            )
        v1 = _geometric_value(f.series, g_r, m)
        v2 = _geometric_value(f.series, g_r, m + 1)
        if v1 != v2:
            raise UnstableTruncation("pairing value changed between m and m + 1")
        return ring.from_raw(v1)
    fam_f = _grouped_exact_coords(f)
    fam_g = _grouped_coords(g_r)
    acc = ring.one
    for nu, fa in fam_f.items():
        gb = fam_g.get(nu)
        if not gb:
            continue
        k = one_var_order(g.d, sum(nu))
        if m + 1 > k:
            raise InvalidTruncation(
                f"component at {nu} only carries {k} terms, need m + 1 = {m + 1}"
            )
        # the exact component polynomial has degree at most the sum of the
        # coordinate exponents, so this window loses nothing
        f_series = _component_series(ring, fa, 1 + sum(fa)).series
        f_comp = FormalWittElement(f_series)
        g_comp = _component_series(ring, gb, k)
        v1 = _geometric_value(f_comp.series, g_comp, m)
        v2 = _geometric_value(f_comp.series, g_comp, m + 1)
        if v1 != v2:
            raise UnstableTruncation("pairing value changed between m and m + 1")
        acc = ring.rmul(acc, v1)
    return ring.from_raw(acc)


def _geometric_value(f_series: TruncatedSeries, g: WittElement, m: int) -> int:
    ring = f_series.ring
    # g' = truncation of g below degree m, as an ascending coefficient list
    gp = [0] * m
    for (k,), c in g.series.terms.items():
        if k < m:
            gp[k] = c
    while gp and gp[-1] == 0:
        gp.pop()
    deg = len(gp) - 1
    if deg <= 0:
        return ring.one
    f_deg = f_series.support_degree()
    if f_deg == 0:
        return ring.one
    reverse = UnivariatePolynomial.from_raw(ring, list(reversed(gp)))
    f_poly = UnivariatePolynomial.from_raw(
        ring, [f_series.terms.get((k,), 0) for k in range(f_deg + 1)]
    )
    return resultant(reverse, f_poly).raw


def pairing_via_components(
    f: FormalWittElement, g: WittElement, d: int | None = None
) -> RingElement:
    """Pair through the p-typical decomposition: split both sides with the
    factor solver, multiply slotwise, pair each slot and recombine with the
    slot twist value^(-j)."""
    ring = f.ring
    if f.n != 1 or g.n != 1:
        raise ShapeMismatch("component pairing works in one variable")
    g_r = _lift_to(ring, g)
    if d is None:
        d = g.d - 1
    if d < 1 or d > g.d:
        raise InvalidTruncation(f"need 1 <= d <= {g.d}")
    bound = max(f.coordinate_bound(), f.degree + 1)
    fam_f = pi_epsilon_inverse(WittElement(f.series.extend(bound)))
    fam_g = pi_epsilon_inverse(WittElement(g_r.series.truncate(d)))
    acc = ring.one
    for j, vf in fam_f.items():
        vg = fam_g.get(j)
        if vg is None or all(e == 0 for e in vg.entries) or all(e == 0 for e in vf.entries):
            continue
        m = max(len(vf), len(vg))
        val = pwitt_pair(vf.pad(m), vg.pad(m))
        acc = ring.rmul(acc, ring.rpow(val.raw, -j))
    return ring.from_raw(acc)


def pairing_matrix(fs, gs, d: int | None = None):
    """Tabulate the algebraic pairing over the cross product."""
    return [[cartier_pair(f, g, d) for g in gs] for f in fs]


def separates(fs, gs, d: int | None = None) -> bool:
    """True when the probe family fs distinguishes every element of gs."""
    signatures = set()
    for g in gs:
        sig = tuple(cartier_pair(f, g, d).raw for f in fs)
        if sig in signatures:
            return False
        signatures.add(sig)
    return True


def random_formal_element(
    ring: CoeffRing, n: int, max_degree: int, rng
) -> FormalWittElement:
    """Random exact polynomial with nilpotent coefficients up to max_degree."""
    from .series import exponents_below

    terms = {zero_exp(n): ring.one}
    deg = 1
    for e in exponents_below(n, max_degree + 1):
        if sum(e) == 0:
            continue
        c = ring.random_nilpotent_raw(rng)
        if c:
            terms[e] = c
            deg = max(deg, sum(e) + 1)
    return FormalWittElement(TruncatedSeries(ring, n, deg, terms, exact=True))
