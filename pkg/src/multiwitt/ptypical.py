"""p-typical Witt vectors, ghost components, and the Artin-Hasse exponential.

A length-m vector (v_0, .., v_{m-1}) has ghost components

    w_i = v_0^(p^i) + p v_1^(p^(i-1)) + .. + p^i v_i,

and the ring laws are the unique polynomial laws that are ghost-wise
addition and multiplication.  Over prime fields the laws are computed by
lifting entries through the fixed representatives {0..p-1}, operating on
ghosts over exact rationals and solving back; the solved entries are
always p-integral, and a violation raises NonIntegral as a bug signal.
Over extensions and rings with nilpotents the universal law polynomials
are precomputed symbolically once per (p, m) and evaluated in the ring.

The Artin-Hasse series AH(s) = exp(sum_i s^(p^i)/p^i) has p-integral
coefficients; E(x, t^j) denotes AH(x t^j).  Multiplying factors
E(v_i, t^(j p^i)) over i embeds a vector into the one-variable truncated
group, and doing so over all j coprime to p is a bijection onto it; the
inverse solves one entry per exponent in ascending order.  Pairing a
nilpotent vector v against w evaluates E at t = 1 on the product v*w,
which is a finite sum by nilpotency.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonIntegral, NotNilpotent, ShapeMismatch, TooLarge
from .qpoly import QPoly
from .ring import CoeffRing, RingElement
from .series import TruncatedSeries
from .witt import WittElement

MAX_SYMBOLIC_LENGTH = 4


@dataclass(frozen=True)
class GhostVector:
    p: int
    entries: tuple

    def __len__(self):
        return len(self.entries)


class PWittVector:
    """Entries are raw ring integers (ring mode) or Fractions (rational mode)."""

    __slots__ = ("p", "entries", "ring")

    def __init__(self, p: int, entries, ring: CoeffRing | None = None):
        self.p = p
        self.ring = ring
        if ring is None:
            self.entries = tuple(Fraction(v) for v in entries)
        else:
            if ring.p != p:
                raise ShapeMismatch("ring characteristic differs from p")
            self.entries = tuple(int(v) % ring.size for v in entries)

    @classmethod
    def from_elements(cls, elements) -> "PWittVector":
        ring = elements[0].ring
        return cls(ring.p, [e.raw for e in elements], ring)

    @classmethod
    def zero(cls, p: int, m: int, ring: CoeffRing | None = None) -> "PWittVector":
        return cls(p, [0] * m, ring)

    @classmethod
    def one(cls, p: int, m: int, ring: CoeffRing | None = None) -> "PWittVector":
        one = 1 if ring is None else ring.one
        return cls(p, [one] + [0] * (m - 1), ring)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, PWittVector)
            and self.p == other.p
            and self.ring == other.ring
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.p, self.ring, self.entries))

    def __repr__(self):
        if self.ring is None:
            inner = ", ".join(str(v) for v in self.entries)
        else:
            inner = ", ".join(self.ring.pretty(v) for v in self.entries)
        return f"W_{self.p}({inner})"

    @property
    def rational(self) -> bool:
        return self.ring is None

    def elements(self):
        if self.ring is None:
            raise ShapeMismatch("rational-mode vector has no ring elements")
        return [self.ring.from_raw(v) for v in self.entries]

    def is_nilpotent(self) -> bool:
        if self.ring is None:
            return all(v == 0 for v in self.entries)
        return all(self.ring.is_nilpotent_raw(v) for v in self.entries)

    def pad(self, m: int) -> "PWittVector":
        if m < len(self.entries):
            raise ShapeMismatch("cannot shorten a vector")
        return PWittVector(self.p, list(self.entries) + [0] * (m - len(self.entries)), self.ring)

    def to_json_dict(self):
        if self.ring is None:
            return {"p": self.p, "entries": [str(v) for v in self.entries]}
        return {"p": self.p, "entries": [self.ring.raw_to_coords(v) for v in self.entries]}


def ghost(v: PWittVector) -> GhostVector:
    """Ghost components of a rational-mode vector."""
    if not v.rational:
        raise ShapeMismatch("ghost components are computed in rational mode")
    p = v.p
    out = []
    for i in range(len(v)):
        acc = Fraction(0)
        for k in range(i + 1):
            acc += Fraction(p) ** k * v.entries[k] ** (p ** (i - k))
        out.append(acc)
    return GhostVector(p, tuple(out))


def from_ghost(w: GhostVector) -> PWittVector:
    """Solve the triangular ghost system over exact rationals."""
    p = w.p
    entries = []
    for i in range(len(w.entries)):
        acc = w.entries[i]
        for k in range(i):
            acc -= Fraction(p) ** k * entries[k] ** (p ** (i - k))
        entries.append(acc / Fraction(p) ** i)
    return PWittVector(p, entries)


# universal law polynomials -------------------------------------------------


@lru_cache(maxsize=None)
def _law_polynomials(p: int, m: int, kind: str) -> tuple:
    """Sum/product laws in variables x_0..x_{m-1}, y_0..y_{m-1}."""
    if m > MAX_SYMBOLIC_LENGTH:
        raise TooLarge(f"symbolic laws limited to length {MAX_SYMBOLIC_LENGTH}")
    nv = 2 * m

    def ghost_poly(vals, i):
        acc = QPoly(nv, {})
        for k in range(i + 1):
            acc = acc + vals[k].pow(p ** (i - k)).scale(Fraction(p) ** k)
        return acc

    xs = [QPoly.var(nv, i) for i in range(m)]
    ys = [QPoly.var(nv, m + i) for i in range(m)]
    laws = []
    for i in range(m):
        gx = ghost_poly(xs, i)
        gy = ghost_poly(ys, i)
        target = gx + gy if kind == "sum" else gx * gy
        for k in range(i):
            target = target - laws[k].pow(p ** (i - k)).scale(Fraction(p) ** k)
        law = target.scale(Fraction(1, p**i))
        law.assert_integer(f"{kind} law entry {i}")
        laws.append(law)
    return tuple(laws)


def _op_rational(v: PWittVector, w: PWittVector, kind: str) -> PWittVector:
    gv, gw = ghost(v).entries, ghost(w).entries
    if kind == "sum":
        gz = [a + b for a, b in zip(gv, gw)]
    else:
        gz = [a * b for a, b in zip(gv, gw)]
    return from_ghost(GhostVector(v.p, tuple(gz)))


def _op_prime_field(v: PWittVector, w: PWittVector, kind: str) -> PWittVector:
    # lift through representatives {0..p-1}, operate on ghosts, reduce
    p, ring = v.p, v.ring
    lifted = _op_rational(
        PWittVector(p, [int(e) for e in v.entries]),
        PWittVector(p, [int(e) for e in w.entries]),
        kind,
    )
    reduced = []
    for e in lifted.entries:
        if e.denominator % p == 0:
            raise NonIntegral(f"solved entry {e} is not {p}-integral")
        num = e.numerator % p
        den = pow(e.denominator % p, p - 2, p) if e.denominator % p != 1 else 1
        reduced.append((num * den) % p)
    return PWittVector(p, reduced, ring)


def _op_ring(v: PWittVector, w: PWittVector, kind: str) -> PWittVector:
    laws = _law_polynomials(v.p, len(v), kind)
    values = list(v.entries) + list(w.entries)
    ring = v.ring
    return PWittVector(v.p, [law.eval_raw(ring, values) for law in laws], ring)


def _binop(v: PWittVector, w: PWittVector, kind: str) -> PWittVector:
    if v.p != w.p or len(v) != len(w) or v.ring != w.ring:
        raise ShapeMismatch("vectors have different shape")
    if v.rational:
        return _op_rational(v, w, kind)
    if v.ring.is_prime_field:
        return _op_prime_field(v, w, kind)
    return _op_ring(v, w, kind)


def pwitt_add(v: PWittVector, w: PWittVector) -> PWittVector:
    return _binop(v, w, "sum")


def pwitt_mul(v: PWittVector, w: PWittVector) -> PWittVector:
    return _binop(v, w, "prod")


def integer_pwitt(c: int, p: int, m: int, ring: CoeffRing | None = None) -> PWittVector:
    """Image of the integer c, the vector with constant ghost (c, c, ..)."""
    sol = from_ghost(GhostVector(p, tuple(Fraction(c) for _ in range(m))))
    if ring is None:
        return sol
    entries = []
    for e in sol.entries:
        if e.denominator != 1:
            raise NonIntegral(f"integer vector entry {e} is fractional")
        entries.append(ring.rint(e.numerator))
    return PWittVector(p, entries, ring)


# Artin-Hasse machinery ------------------------------------------------------


@lru_cache(maxsize=None)
def artin_hasse_coefficients(p: int, count: int) -> tuple:
    """First ``count`` coefficients of AH(s), built with the argument kept as
    an indeterminate so the shape (coefficient k is a scalar times x^k) and
    p-integrality are both checked."""
    # series in t with QPoly coefficients in one variable x
    K = count
    series = [QPoly(1, {}) for _ in range(K)]
    series[0] = QPoly.const(1, 1)
    log_term = [QPoly(1, {}) for _ in range(K)]
    i = 0
    while p**i < K:
        log_term[p**i] = QPoly.var(1, 0, p**i).scale(Fraction(1, p**i))
        i += 1
    # exp via accumulation of powers: E = sum L^k / k!
    power = [QPoly.const(1, 1)] + [QPoly(1, {}) for _ in range(K - 1)]
    fact = 1
    for k in range(1, K):
        fact *= k
        nxt = [QPoly(1, {}) for _ in range(K)]
        for da in range(K):
            if not power[da]:
                continue
            for db in range(1, K - da):
                if log_term[db]:
                    nxt[da + db] = nxt[da + db] + power[da] * log_term[db]
        power = nxt
        if not any(power):
            break
        inv_fact = Fraction(1, fact)
        for deg in range(K):
            if power[deg]:
                series[deg] = series[deg] + power[deg].scale(inv_fact)
    out = []
    for k in range(K):
        poly = series[k]
        poly.assert_p_integral(p, f"Artin-Hasse coefficient {k}")
        for e, c in poly.terms.items():
            if e != (k,):
                raise NonIntegral(f"unexpected monomial x^{e[0]} at degree {k}")
        out.append(poly.terms.get((k,), Fraction(0)))
    return tuple(out)


def _reduce_fraction(ring: CoeffRing, c: Fraction) -> int:
    p = ring.p
    if c.denominator % p == 0:
        raise NonIntegral(f"{c} is not {p}-integral")
    num = ring.rint(c.numerator)
    den = ring.rint(c.denominator)
    return ring.rmul(num, ring.rinv(den))


def artin_hasse_exp(x: RingElement, j: int, d: int) -> WittElement:
    """E(x, t^j) = AH(x t^j) as a one-variable element truncated at d."""
    ring = x.ring
    if j < 1:
        raise ValueError("exponent j must be >= 1")
    kmax = (d - 1) // j
    coeffs = artin_hasse_coefficients(ring.p, kmax + 1)
    terms = {(0,): ring.one}
    xp = ring.one
    for k in range(1, kmax + 1):
        xp = ring.rmul(xp, x.raw)
        c = ring.rmul(_reduce_fraction(ring, coeffs[k]), xp)
        if c:
            terms[(j * k,)] = c
    return WittElement(TruncatedSeries(ring, 1, d, terms, exact=False))


def ah_value(ring: CoeffRing, x_raw: int) -> int:
    """AH(x) for nilpotent x: the finite sum of a_k x^k."""
    if not ring.is_nilpotent_raw(x_raw):
        raise NotNilpotent("Artin-Hasse evaluation at 1 needs a nilpotent argument")
    acc = ring.one
    xp = x_raw
    k = 1
    while xp != 0:
        coeffs = artin_hasse_coefficients(ring.p, k + 1)
        acc = ring.radd(acc, ring.rmul(_reduce_fraction(ring, coeffs[k]), xp))
        xp = ring.rmul(xp, x_raw)
        k += 1
    return acc


def component_lengths(p: int, d: int) -> dict:
    """For each j coprime to p below d, the number of visible entries:
    exponents j p^i < d."""
    out = {}
    for j in range(1, d):
        if j % p == 0:
            continue
        m = 0
        while j * p**m < d:
            m += 1
        out[j] = m
    return out


def pi_epsilon(family: dict, ring: CoeffRing, d: int) -> WittElement:
    """Multiply the factors E(v_{j,i}, t^(j p^i)) of the given family."""
    p = ring.p
    acc = WittElement.one(ring, 1, d)
    for j in sorted(family):
        if j % p == 0 or j < 1:
            raise ShapeMismatch(f"index {j} is not coprime to p = {p}")
        v = family[j]
        for i, entry in enumerate(v.entries):
            if entry == 0:
                continue
            k = j * p**i
            if k >= d:
                continue
            factor = artin_hasse_exp(ring.from_raw(entry), k, d)
            acc = WittElement(acc.series.mul(factor.series))
    return acc


def pi_epsilon_inverse(a: WittElement) -> dict:
    """Solve for the family; the coefficient at t^(j p^i) is the next unknown."""
    if a.n != 1:
        raise ShapeMismatch("component solving works in one variable")
    ring, d = a.ring, a.d
    p = ring.p
    lengths = component_lengths(p, d)
    entries = {j: [0] * m for j, m in lengths.items()}
    running = a.series
    for k in range(1, d):
        c = running.terms.get((k,), 0)
        j, i = k, 0
        while j % p == 0:
            j //= p
            i += 1
        if c == 0:
            continue
        entries[j][i] = c
        factor = artin_hasse_exp(ring.from_raw(c), k, d)
        running = running.mul(factor.series.inv())
    if any(sum(e) != 0 for e in running.terms):
        raise NonIntegral("factor peeling left a nonunit remainder")
    return {j: PWittVector(p, e, ring) for j, e in entries.items()}


def pwitt_pair(v: PWittVector, w: PWittVector) -> RingElement:
    """E(v*w, 1); needs nilpotent entries on the left so the sum is finite."""
    if v.rational or w.rational:
        raise ShapeMismatch("pairing needs ring-mode vectors")
    if not v.is_nilpotent():
        raise NotNilpotent("left pairing argument must have nilpotent entries")
    u = pwitt_mul(v, w)
    ring = v.ring
    acc = ring.one
    for entry in u.entries:
        acc = ring.rmul(acc, ah_value(ring, entry))
    return ring.from_raw(acc)
