"""The group and ring of multivariable Witt vectors at finite truncation.

Elements are truncated power series with constant term 1.  The group law
is series multiplication.  Every element factors uniquely as an ordered
product of binomials (1 - r_nu t^nu) over exponents 0 < |nu| < d; the
family {r_nu} is the coordinate form, and extraction peels factors off in
graded order.

Grouping exponents by their primitive part splits the group into a finite
product of one-variable components: nu = i * nu0 with gcd(nu0) = 1 turns
the coordinates {r_(i nu0)}_i into a one-variable element in s = t^nu0,
truncated at ceil(d / |nu0|) powers of s.  Ring multiplication in one
variable follows the classical convolution on coordinates,

    prod_i (1 - a_i s^i) * prod_j (1 - b_j s^j)
        = prod_{i,j} (1 - a_i^(j/g) b_j^(i/g) s^(ij/g))^g,   g = gcd(i, j),

and the n-variable ring multiplication is transported through the
decomposition componentwise.  The multiplicative unit at truncation d is
the product of (1 - t^nu) over all primitive nu with |nu| < d.

Frobenius acts on coefficients; the Lang map divides the Frobenius image
by the element, and its kernel over an extension field is the subgroup of
elements with coefficients fixed by Frobenius.
"""

from __future__ import annotations

from math import gcd

from .errors import NilpotentCoefficients, ShapeMismatch
from .ring import CoeffRing, RingElement
from .series import (
    TruncatedSeries,
    content,
    exponents_below,
    grlex_key,
    primitive_exponents_below,
    primitive_part,
    zero_exp,
)


def one_var_order(d: int, weight: int) -> int:
    """Truncation order for the component at a primitive exponent of total
    degree ``weight``: exponents i with i * weight < d."""
    return (d + weight - 1) // weight


class WittElement:
    """Series with constant term 1; wraps a TruncatedSeries."""

    __slots__ = ("series", "_coords")

    def __init__(self, series: TruncatedSeries):
        if series.constant_raw != series.ring.one:
            raise ShapeMismatch("constant term must be 1")
        self.series = series
        self._coords = None

    # constructors ---------------------------------------------------------

    @classmethod
    def one(cls, ring: CoeffRing, n: int, d: int, exact: bool = False) -> "WittElement":
        return cls(TruncatedSeries.one(ring, n, d, exact))

    @classmethod
    def binomial(
        cls, ring: CoeffRing, n: int, d: int, exp: tuple, coeff_raw: int
    ) -> "WittElement":
        """The factor 1 - coeff * t^exp (exact when it fits under d)."""
        terms = {zero_exp(n): ring.one}
        if coeff_raw != 0:
            if sum(exp) >= d:
                raise ShapeMismatch(f"exponent {exp} at or beyond truncation {d}")
            terms[tuple(exp)] = ring.rneg(coeff_raw)
        return cls(TruncatedSeries(ring, n, d, terms, exact=True))

    # delegation -----------------------------------------------------------

    @property
    def ring(self) -> CoeffRing:
        return self.series.ring

    @property
    def n(self) -> int:
        return self.series.n

    @property
    def d(self) -> int:
        return self.series.d

    def __eq__(self, other):
        return isinstance(other, WittElement) and self.series == other.series

    def __hash__(self):
        return hash(self.series)

    def __repr__(self):
        return repr(self.series).replace("<series", "<witt", 1)

    def __add__(self, other: "WittElement") -> "WittElement":
        return witt_add(self, other)

    def __neg__(self) -> "WittElement":
        return witt_neg(self)

    def __sub__(self, other: "WittElement") -> "WittElement":
        return witt_add(self, witt_neg(other))

    def __mul__(self, other: "WittElement") -> "WittElement":
        return witt_mul(self, other)

    def truncate(self, d_new: int) -> "WittElement":
        return WittElement(self.series.truncate(d_new))

    def coeff(self, exp) -> RingElement:
        return self.series.coeff(exp)

    def group_pow(self, k: int) -> "WittElement":
        if k < 0:
            return witt_neg(self).group_pow(-k)
        out = WittElement.one(self.ring, self.n, self.d)
        base = self
        while k:
            if k & 1:
                out = witt_add(out, base)
            base = witt_add(base, base)
            k >>= 1
        return out

    def to_json_dict(self):
        return self.series.to_json_dict()

    @classmethod
    def from_json_dict(cls, ring: CoeffRing, obj) -> "WittElement":
        return cls(TruncatedSeries.from_json_dict(ring, obj))


class WittCoordinates:
    """Sparse coordinate family {r_nu}, 0 < |nu| < d."""

    __slots__ = ("ring", "n", "d", "coords")

    def __init__(self, ring: CoeffRing, n: int, d: int, coords: dict):
        self.ring = ring
        self.n = n
        self.d = d
        self.coords = {e: c for e, c in coords.items() if c != 0}

    def coeff(self, exp) -> RingElement:
        return self.ring.from_raw(self.coords.get(tuple(exp), 0))

    def __eq__(self, other):
        return (
            isinstance(other, WittCoordinates)
            and (self.ring, self.n, self.d) == (other.ring, other.n, other.d)
            and self.coords == other.coords
        )

    def __repr__(self):
        bits = ", ".join(
            f"{e}:{self.ring.pretty(c)}"
            for e, c in sorted(self.coords.items(), key=lambda kv: grlex_key(kv[0]))
        )
        return f"<coords {{{bits}}} mod deg {self.d}>"

    def to_json_dict(self):
        return {
            "coords": [
                {"exp": list(e), "r": self.ring.raw_to_coords(self.coords[e])}
                for e in sorted(self.coords, key=grlex_key)
            ]
        }

    @classmethod
    def from_json_dict(cls, ring: CoeffRing, n: int, d: int, obj) -> "WittCoordinates":
        coords = {}
        for t in obj["coords"]:
            coords[tuple(int(v) for v in t["exp"])] = ring.coords_to_raw(t["r"])
        return cls(ring, n, d, coords)


class OneVarComponentFamily:
    """One-variable components indexed by primitive exponents below d."""

    __slots__ = ("ring", "n", "d", "components")

    def __init__(self, ring: CoeffRing, n: int, d: int, components: dict):
        self.ring = ring
        self.n = n
        self.d = d
        self.components = components

    def component(self, exp) -> WittElement:
        return self.components[tuple(exp)]

    def recompose(self) -> WittElement:
        """Substitute s = t^nu in every component and multiply."""
        ring, n, d = self.ring, self.n, self.d
        acc = TruncatedSeries.one(ring, n, d)
        for nu in sorted(self.components, key=grlex_key):
            comp = self.components[nu]
            terms = {}
            for (i,), c in comp.series.terms.items():
                terms[tuple(i * v for v in nu)] = c
            acc = acc.mul(TruncatedSeries(ring, n, d, terms))
        return WittElement(acc)


def _check_same_shape(a: WittElement, b: WittElement):
    if a.ring != b.ring or a.n != b.n or a.d != b.d:
        raise ShapeMismatch("operands have different shape")


def witt_add(a: WittElement, b: WittElement) -> WittElement:
    """Group addition: multiplication of the underlying series."""
    _check_same_shape(a, b)
    return WittElement(a.series.mul(b.series))


def witt_neg(a: WittElement) -> WittElement:
    """Group inverse: series inverse."""
    return WittElement(a.series.inv())


def witt_coordinates(a: WittElement) -> WittCoordinates:
    """Peel binomial factors in graded order until degree d is exhausted."""
    if a._coords is not None:
        return a._coords
    ring, n, d = a.ring, a.n, a.d
    running = a.series
    coords = {}
    for exp in exponents_below(n, d):
        if sum(exp) == 0:
            continue
        c = running.terms.get(exp, 0)
        if c == 0:
            continue
        r = ring.rneg(c)
        coords[exp] = r
        # divide by (1 - r t^exp): multiply by the geometric series in r t^exp
        add = {}
        pw = r
        k = 1
        while k * sum(exp) < d and pw != 0:
            shift = tuple(k * v for v in exp)
            for e, cc in running.terms.items():
                if sum(e) + sum(shift) >= d:
                    continue
                t = tuple(x + y for x, y in zip(e, shift))
                prod = ring.rmul(cc, pw)
                if prod == 0:
                    continue
                cur = add.get(t)
                add[t] = prod if cur is None else ring.radd(cur, prod)
            pw = ring.rmul(pw, r)
            k += 1
        if add:
            running = running.add_series(
                TruncatedSeries(ring, n, d, {e: c for e, c in add.items() if c != 0})
            )
    result = WittCoordinates(ring, n, d, coords)
    a._coords = result
    return result


def from_coordinates(c: WittCoordinates) -> WittElement:
    """Ordered product of the binomial factors, truncated at d.

    The result carries the exact flag when no nonzero term overflowed the
    window, i.e. when it is the complete polynomial product."""
    ring, n, d = c.ring, c.n, c.d
    acc = TruncatedSeries.one(ring, n, d, exact=True)
    for exp in sorted(c.coords, key=grlex_key):
        r = c.coords[exp]
        # acc *= (1 - r t^exp)
        acc = acc.add_series(acc.scale_shift(ring.rneg(r), exp))
    return WittElement(acc)


def decompose(a: WittElement) -> OneVarComponentFamily:
    """Group the coordinates by primitive exponent into one-variable parts."""
    ring, n, d = a.ring, a.n, a.d
    coords = witt_coordinates(a).coords
    grouped = {}
    for exp, r in coords.items():
        nu0 = primitive_part(exp)
        grouped.setdefault(nu0, {})[(content(exp),)] = r
    components = {}
    for nu0 in primitive_exponents_below(n, d):
        k = one_var_order(d, sum(nu0))
        comp_coords = WittCoordinates(ring, 1, k, grouped.get(nu0, {}))
        components[nu0] = from_coordinates(comp_coords)
    return OneVarComponentFamily(ring, n, d, components)


def mul_coordinate_families(ring: CoeffRing, d: int, ca: dict, cb: dict) -> TruncatedSeries:
    """Assemble the one-variable convolution product from two coordinate
    families {i: a_i}, {j: b_j} at truncation d."""
    acc = TruncatedSeries.one(ring, 1, d, exact=True)
    for i, ai in ca.items():
        for j, bj in cb.items():
            g = gcd(i, j)
            L = i * j // g
            c = ring.rmul(ring.rpow(ai, j // g), ring.rpow(bj, i // g))
            if c == 0:
                continue
            if L >= d:
                # a genuinely nonzero factor falls outside the window
                acc = acc.copy_with(exact=False)
                continue
            acc = acc.mul(_binomial_power(ring, d, L, c, g))
    return acc


def witt_mul_1var(a: WittElement, b: WittElement) -> WittElement:
    """Coordinatewise convolution product in one variable."""
    _check_same_shape(a, b)
    if a.n != 1:
        raise ShapeMismatch("one-variable multiplication needs n = 1")
    ring, d = a.ring, a.d
    ca = {i: c for (i,), c in witt_coordinates(a).coords.items()}
    cb = {j: c for (j,), c in witt_coordinates(b).coords.items()}
    return WittElement(mul_coordinate_families(ring, d, ca, cb))


def _binomial_power(ring: CoeffRing, d: int, L: int, c: int, g: int) -> TruncatedSeries:
    """(1 - c t^L)^g as a truncated series in one variable."""
    terms = {(0,): ring.one}
    binom = 1
    pw = ring.one
    discarded = False
    for k in range(1, g + 1):
        binom = binom * (g - k + 1) // k
        pw = ring.rmul(pw, c)
        if pw == 0:
            break
        coef = ring.rmul(ring.rint(binom if k % 2 == 0 else -binom), pw)
        if coef == 0:
            continue
        if k * L >= d:
            discarded = True
            continue
        terms[(k * L,)] = coef
    return TruncatedSeries(ring, 1, d, terms, exact=not discarded)


def ring_one(ring: CoeffRing, n: int, d: int) -> WittElement:
    """Multiplicative unit: product of (1 - t^nu) over primitive nu, |nu| < d."""
    acc = TruncatedSeries.one(ring, n, d)
    for nu in primitive_exponents_below(n, d):
        acc = acc.add_series(acc.scale_shift(ring.rneg(ring.one), nu))
    return WittElement(acc)


def witt_mul(a: WittElement, b: WittElement) -> WittElement:
    """Ring multiplication, componentwise through the decomposition."""
    _check_same_shape(a, b)
    if a.n == 1:
        return witt_mul_1var(a, b)
    fa = decompose(a)
    fb = decompose(b)
    products = {
        nu: witt_mul_1var(fa.components[nu], fb.components[nu]) for nu in fa.components
    }
    return OneVarComponentFamily(a.ring, a.n, a.d, products).recompose()


witt_mul_n = witt_mul


def frobenius_witt(a: WittElement, qpow: int) -> WittElement:
    """Apply x -> x^q to every coefficient; requires field coefficients."""
    if a.ring.nil != 1:
        raise NilpotentCoefficients("Frobenius on series needs field coefficients")
    ring = a.ring
    return WittElement(a.series.map_coefficients(lambda c: ring.rfrob(c, qpow)))


def lang_map(a: WittElement, qpow: int) -> WittElement:
    """Frobenius image divided by the element (the group law is written
    multiplicatively, so 'Frobenius minus identity' is a quotient)."""
    return witt_add(frobenius_witt(a, qpow), witt_neg(a))


def enumerate_witt_elements(ring: CoeffRing, n: int, d: int):
    """Yield every element of the truncated group, coefficients in grid order."""
    exps = [e for e in exponents_below(n, d) if sum(e) > 0]
    size = ring.size
    total = size ** len(exps)
    for idx in range(total):
        terms = {zero_exp(n): ring.one}
        v = idx
        for e in exps:
            c = v % size
            v //= size
            if c:
                terms[e] = c
        yield WittElement(TruncatedSeries(ring, n, d, terms))


def random_witt_element(ring: CoeffRing, n: int, d: int, rng) -> WittElement:
    terms = {zero_exp(n): ring.one}
    for e in exponents_below(n, d):
        if sum(e) == 0:
            continue
        c = ring.random_raw(rng)
        if c:
            terms[e] = c
    return WittElement(TruncatedSeries(ring, n, d, terms))
