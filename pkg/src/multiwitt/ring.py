"""Exact arithmetic in F_q and its nilpotent extensions F_q[eps]/(eps^e).

A finite field F_q with q = p^e is F_p[x]/(f) for a monic irreducible f.
Field elements are stored as integer indices 0..q-1; the base-p digits of
an index are the coefficients of the element on the basis 1, x, .., x^(e-1).
All field operations go through small lookup tables built once per field.

The coefficient rings used everywhere else are R = F_q[eps]/(eps^e_nil)
with e_nil >= 1 (e_nil = 1 means R = F_q).  A raw element of R is a single
integer whose base-q digits are the eps-coefficients, eps-degree ascending.
An element is a unit iff its eps^0 digit is nonzero in F_q, and nilpotent
iff that digit is zero.  Hot loops work on raw integers via the CoeffRing
methods; RingElement is a thin wrapper with operator overloads for public
use and tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import NonUnit

# Irreducible moduli (ascending coefficients) for the field sizes shipped
# by default.  Degree-1 entries make F_p itself uniform with extensions.
BUILTIN_MODULI = {
    2: (0, 1),
    3: (0, 1),
    5: (0, 1),
    4: (1, 1, 1),
    9: (1, 0, 1),
    25: (2, 0, 1),
    8: (1, 1, 0, 1),
    27: (1, 2, 0, 1),
    16: (1, 1, 0, 0, 1),
}

_MAX_TABLE_Q = 2048


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def _poly_mod_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mulmod_p(a, b, modulus, p):
    # product of coefficient lists over F_p, reduced by the monic modulus
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    e = len(modulus) - 1
    for k in range(len(out) - 1, e - 1, -1):
        c = out[k]
        if c == 0:
            continue
        out[k] = 0
        for t in range(e):
            out[k - e + t] = (out[k - e + t] - c * modulus[t]) % p
    return _poly_mod_trim(out)


def _poly_divides_p(d, f, p):
    # True when monic d divides f over F_p
    f = list(f)
    _poly_mod_trim(f)
    e = len(d) - 1
    while len(f) - 1 >= e and f:
        c = f[-1]
        k = len(f) - 1 - e
        for t in range(len(d)):
            f[k + t] = (f[k + t] - c * d[t]) % p
        _poly_mod_trim(f)
    return not f


def _check_irreducible(modulus, p):
    e = len(modulus) - 1
    if e == 1:
        return
    # no roots, then trial division by all lower-degree monic polynomials
    for a in range(p):
        acc = 0
        for c in reversed(modulus):
            acc = (acc * a + c) % p
        if acc == 0:
            raise ValueError(f"modulus has root {a} mod {p}")
    for deg in range(2, e // 2 + 1):
        if p**deg > 10**6:
            raise ValueError("modulus too large to verify irreducibility")
        for idx in range(p**deg):
            d = []
            v = idx
            for _ in range(deg):
                d.append(v % p)
                v //= p
            d.append(1)
            if _poly_divides_p(d, modulus, p):
                raise ValueError("modulus is reducible over F_p")


class _FieldTables:
    __slots__ = ("add", "mul", "neg", "inv", "frob")

    def __init__(self, p, e, modulus):
        q = p**e
        to_vec = []
        for idx in range(q):
            v, digs = idx, []
            for _ in range(e):
                digs.append(v % p)
                v //= p
            to_vec.append(digs)

        def enc(vec):
            idx = 0
            for c in reversed(vec):
                idx = idx * p + c
            return idx

        self.add = tuple(
            tuple(enc([(x + y) % p for x, y in zip(to_vec[i], to_vec[j])]) for j in range(q))
            for i in range(q)
        )
        self.neg = tuple(enc([(-x) % p for x in to_vec[i]]) for i in range(q))
        mul = []
        for i in range(q):
            row = []
            for j in range(q):
                prod = _poly_mulmod_p(
                    _poly_mod_trim(list(to_vec[i])), _poly_mod_trim(list(to_vec[j])), modulus, p
                )
                row.append(enc(prod + [0] * (e - len(prod))))
            mul.append(tuple(row))
        self.mul = tuple(mul)
        inv = [0] * q
        for i in range(1, q):
            for j in range(1, q):
                if self.mul[i][j] == 1:
                    inv[i] = j
                    break
        self.inv = tuple(inv)
        frob = []
        for i in range(q):
            acc = i
            for _ in range(p - 1):
                acc = self.mul[acc][i]
            frob.append(acc)
        self.frob = tuple(frob)


@lru_cache(maxsize=None)
def _tables_for(p, e, modulus):
    return _FieldTables(p, e, modulus)


@dataclass(frozen=True)
class FiniteField:
    """F_q = F_p[x]/(modulus), q = p^e, elements indexed 0..q-1."""

    p: int
    e: int
    modulus: tuple

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e < 1:
            raise ValueError("extension degree must be >= 1")
        m = tuple(c % self.p for c in self.modulus)
        object.__setattr__(self, "modulus", m)
        if len(m) != self.e + 1 or m[-1] != 1:
            raise ValueError("modulus must be monic of degree e")
        if self.q > _MAX_TABLE_Q:
            raise ValueError(f"field size {self.q} beyond supported table size")
        _check_irreducible(m, self.p)

    @property
    def q(self) -> int:
        return self.p**self.e

    @classmethod
    def of_order(cls, q: int) -> "FiniteField":
        if q in BUILTIN_MODULI:
            m = BUILTIN_MODULI[q]
            return cls(_char_of(q), len(m) - 1, m)
        p = _char_of(q)
        e = 0
        qq = q
        while qq > 1:
            qq //= p
            e += 1
        if p**e != q:
            raise ValueError(f"{q} is not a prime power")
        return cls(p, e, _find_irreducible(p, e))

    @property
    def tables(self) -> _FieldTables:
        return _tables_for(self.p, self.e, self.modulus)

    def index_to_vector(self, idx: int):
        v, out = idx, []
        for _ in range(self.e):
            out.append(v % self.p)
            v //= self.p
        return out

    def vector_to_index(self, vec) -> int:
        if len(vec) != self.e:
            raise ValueError("coefficient vector has wrong length")
        idx = 0
        for c in reversed(vec):
            idx = idx * self.p + (c % self.p)
        return idx

    def to_json_dict(self):
        return {"p": self.p, "e": self.e, "modulus": list(self.modulus)}


def _char_of(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                raise ValueError(f"{q} is not a prime power")
            return p
    raise ValueError(f"{q} is not a prime power")


def _find_irreducible(p: int, e: int):
    # deterministic scan in index order; desk-scale sizes only
    if e == 1:
        return (0, 1)
    for idx in range(p**e):
        cand = []
        v = idx
        for _ in range(e):
            cand.append(v % p)
            v //= p
        cand.append(1)
        try:
            _check_irreducible(tuple(cand), p)
            return tuple(cand)
        except ValueError:
            continue
    raise ValueError(f"no irreducible polynomial found for p={p}, e={e}")


@dataclass(frozen=True)
class CoeffRing:
    """R = F_q[eps]/(eps^nil); nil = 1 gives R = F_q itself."""

    field: FiniteField
    nil: int = 1

    def __post_init__(self):
        if self.nil < 1:
            raise ValueError("nilpotency order must be >= 1")

    @classmethod
    def make(cls, q: int, nil: int = 1, modulus=None) -> "CoeffRing":
        if modulus is not None:
            p = _char_of(q)
            e = len(modulus) - 1
            if p**e != q:
                raise ValueError("modulus degree does not match q")
            return cls(FiniteField(p, e, tuple(modulus)), nil)
        return cls(FiniteField.of_order(q), nil)

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def size(self) -> int:
        return self.q**self.nil

    @property
    def is_field(self) -> bool:
        return self.nil == 1

    @property
    def is_prime_field(self) -> bool:
        return self.nil == 1 and self.field.e == 1

    # raw operations on integer-encoded elements -------------------------

    def radd(self, a: int, b: int) -> int:
        t = self.field.tables
        if self.nil == 1:
            return t.add[a][b]
        q, out, mult = self.q, 0, 1
        for _ in range(self.nil):
            out += t.add[a % q][b % q] * mult
            a //= q
            b //= q
            mult *= q
        return out

    def rneg(self, a: int) -> int:
        t = self.field.tables
        if self.nil == 1:
            return t.neg[a]
        q, out, mult = self.q, 0, 1
        for _ in range(self.nil):
            out += t.neg[a % q] * mult
            a //= q
            mult *= q
        return out

    def rsub(self, a: int, b: int) -> int:
        return self.radd(a, self.rneg(b))

    def rmul(self, a: int, b: int) -> int:
        t = self.field.tables
        if self.nil == 1:
            return t.mul[a][b]
        q = self.q
        da = self._digits(a)
        db = self._digits(b)
        out = 0
        for i, x in enumerate(da):
            if x == 0:
                continue
            row = t.mul[x]
            for j in range(self.nil - i):
                y = db[j]
                if y == 0:
                    continue
                out = self._digit_add(out, i + j, row[y])
        return out

    def _digits(self, a: int):
        q = self.q
        return [(a // q**k) % q for k in range(self.nil)]

    def _digit_add(self, acc: int, slot: int, fval: int) -> int:
        q = self.q
        t = self.field.tables
        cur = (acc // q**slot) % q
        return acc + (t.add[cur][fval] - cur) * q**slot

    def is_unit_raw(self, a: int) -> bool:
        return a % self.q != 0

    def is_nilpotent_raw(self, a: int) -> bool:
        return a % self.q == 0

    def rinv(self, a: int) -> int:
        if not self.is_unit_raw(a):
            raise NonUnit(f"{self.pretty(a)} is not a unit")
        t = self.field.tables
        u0 = t.inv[a % self.q]
        if self.nil == 1:
            return u0
        # a = c(1 + n) with n nilpotent: invert via finite geometric series
        x = self.rsub(self.one, self.rmul(u0, a))
        acc, pw = self.one, x
        while pw != 0:
            acc = self.radd(acc, pw)
            pw = self.rmul(pw, x)
        return self.rmul(u0, acc)

    def rpow(self, a: int, k: int) -> int:
        if k < 0:
            a = self.rinv(a)
            k = -k
        out, base = self.one, a
        while k:
            if k & 1:
                out = self.rmul(out, base)
            base = self.rmul(base, base)
            k >>= 1
        return out

    def rfrob_p(self, a: int) -> int:
        # (sum a_i eps^i)^p = sum a_i^p eps^(ip) in characteristic p
        t = self.field.tables
        if self.nil == 1:
            return t.frob[a]
        q = self.q
        out = 0
        for i, x in enumerate(self._digits(a)):
            if x == 0 or i * self.p >= self.nil:
                continue
            out = self._digit_add(out, i * self.p, t.frob[x])
        return out

    def rfrob(self, a: int, qpow: int) -> int:
        k = 0
        qq = qpow
        while qq > 1 and qq % self.p == 0:
            qq //= self.p
            k += 1
        if qq != 1 or k == 0:
            raise ValueError(f"{qpow} is not a positive power of the characteristic {self.p}")
        for _ in range(k):
            a = self.rfrob_p(a)
        return a

    def rint(self, c: int) -> int:
        # image of an integer under Z -> R
        return c % self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    @property
    def eps_raw(self) -> int:
        if self.nil < 2:
            raise ValueError("ring has no nilpotent generator (nil = 1)")
        return self.q

    def element_indices(self):
        return range(self.size)

    def nilpotent_indices(self):
        return (a for a in range(self.size) if a % self.q == 0)

    def random_raw(self, rng) -> int:
        return rng.randrange(self.size)

    def random_nilpotent_raw(self, rng) -> int:
        return rng.randrange(self.size // self.q) * self.q

    # coordinate matrices and wrappers -----------------------------------

    def coords_to_raw(self, coords) -> int:
        if len(coords) != self.nil:
            raise ValueError(f"expected {self.nil} eps-rows, got {len(coords)}")
        out, mult = 0, 1
        for row in coords:
            out += self.field.vector_to_index(row) * mult
            mult *= self.q
        return out

    def raw_to_coords(self, a: int):
        return [self.field.index_to_vector(x) for x in self._digits(a)]

    def element(self, coords) -> "RingElement":
        return RingElement(self, self.coords_to_raw(coords))

    def from_raw(self, a: int) -> "RingElement":
        return RingElement(self, a % self.size)

    def from_int(self, c: int) -> "RingElement":
        return RingElement(self, self.rint(c))

    def eps(self) -> "RingElement":
        return RingElement(self, self.eps_raw)

    def gen(self) -> "RingElement":
        """Generator x of the field part (zero for prime fields of degree 1)."""
        if self.field.e == 1:
            raise ValueError("prime field has no extension generator")
        return RingElement(self, self.p)

    def elements(self):
        return (RingElement(self, a) for a in range(self.size))

    def pretty(self, a: int) -> str:
        parts = []
        for i, x in enumerate(self._digits(a)):
            if x == 0:
                continue
            vec = self.field.index_to_vector(x)
            inner = []
            for k, c in enumerate(vec):
                if c == 0:
                    continue
                s = "" if (c == 1 and k > 0) else str(c)
                if k == 1:
                    s += "x"
                elif k > 1:
                    s += f"x^{k}"
                inner.append(s)
            base = "+".join(inner)
            if i == 0:
                parts.append(base)
            else:
                e = "e" if i == 1 else f"e^{i}"
                parts.append(e if base == "1" else f"({base}){e}")
        return "+".join(parts) if parts else "0"

    def to_json_dict(self):
        d = self.field.to_json_dict()
        d["nil"] = self.nil
        return d

    @classmethod
    def from_json_dict(cls, obj) -> "CoeffRing":
        return cls(
            FiniteField(int(obj["p"]), int(obj["e"]), tuple(int(c) for c in obj["modulus"])),
            int(obj.get("nil", 1)),
        )


class RingElement:
    """Element of a CoeffRing; immutable wrapper over the raw integer index."""

    __slots__ = ("ring", "raw")

    def __init__(self, ring: CoeffRing, raw: int):
        self.ring = ring
        self.raw = raw

    def __eq__(self, other):
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.raw == other.raw
        )

    def __hash__(self):
        return hash((self.ring, self.raw))

    def __repr__(self):
        return f"<{self.ring.pretty(self.raw)}>"

    def __add__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.radd(self.raw, other.raw))

    def __sub__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.rsub(self.raw, other.raw))

    def __mul__(self, other):
        self._check(other)
        return RingElement(self.ring, self.ring.rmul(self.raw, other.raw))

    def __neg__(self):
        return RingElement(self.ring, self.ring.rneg(self.raw))

    def __pow__(self, k: int):
        return RingElement(self.ring, self.ring.rpow(self.raw, k))

    def inv(self) -> "RingElement":
        return RingElement(self.ring, self.ring.rinv(self.raw))

    def _check(self, other):
        if not isinstance(other, RingElement) or other.ring != self.ring:
            raise ValueError("operands belong to different rings")

    @property
    def is_unit(self) -> bool:
        return self.ring.is_unit_raw(self.raw)

    @property
    def is_nilpotent(self) -> bool:
        return self.ring.is_nilpotent_raw(self.raw)

    @property
    def is_zero(self) -> bool:
        return self.raw == 0

    @property
    def coords(self):
        return self.ring.raw_to_coords(self.raw)

    def frobenius(self, qpow: int) -> "RingElement":
        return RingElement(self.ring, self.ring.rfrob(self.raw, qpow))

    def to_json(self):
        return self.coords


def field_arith(a: RingElement, b, op: str, k: int | None = None) -> RingElement:
    """Dispatch form of the basic arithmetic: add, sub, mul, inv, pow."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "inv":
        return a.inv()
    if op == "pow":
        if k is None:
            raise ValueError("pow needs an exponent")
        return a**k
    raise ValueError(f"unknown operation {op!r}")


def frobenius(a: RingElement, qpow: int) -> RingElement:
    """Raise to the q-th power by repeated p-power maps."""
    return a.frobenius(qpow)
