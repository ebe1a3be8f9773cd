"""Internal sparse multivariate polynomials with exact rational coefficients.

Used to build the universal addition/multiplication laws for p-typical
vectors and the Artin-Hasse coefficient series once per (p, length), after
which everything is evaluated inside the target ring.  Kept deliberately
tiny: only the operations the table construction needs.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import NonIntegral


class QPoly:
    """Map from exponent tuples to nonzero Fractions; fixed variable count."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if c:
                    self.terms[e] = Fraction(c)

    @classmethod
    def const(cls, nvars: int, c) -> "QPoly":
        return cls(nvars, {(0,) * nvars: Fraction(c)})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "QPoly":
        e = [0] * nvars
        e[i] = power
        return cls(nvars, {tuple(e): Fraction(1)})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, QPoly) and self.terms == other.terms

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return QPoly(self.nvars, out)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + other.scale(-1)

    def __mul__(self, other: "QPoly") -> "QPoly":
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return QPoly(self.nvars, out)

    def scale(self, c) -> "QPoly":
        c = Fraction(c)
        return QPoly(self.nvars, {e: v * c for e, v in self.terms.items()})

    def pow(self, k: int) -> "QPoly":
        out = QPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def assert_p_integral(self, p: int, what: str = "coefficient") -> None:
        for e, c in self.terms.items():
            if c.denominator % p == 0:
                raise NonIntegral(f"{what} at {e} is {c}, not {p}-integral")

    def assert_integer(self, what: str = "coefficient") -> None:
        for e, c in self.terms.items():
            if c.denominator != 1:
                raise NonIntegral(f"{what} at {e} is {c}, not an integer")

    def eval_raw(self, ring, values) -> int:
        """Evaluate at raw ring elements; coefficients must be p-integral."""
        p = ring.p
        acc = ring.zero
        pow_cache = [dict() for _ in range(self.nvars)]
        for e, c in self.terms.items():
            if c.denominator % p == 0:
                raise NonIntegral(f"coefficient {c} not {p}-integral")
            num = c.numerator % p
            den = c.denominator % p
            coef = ring.rmul(ring.rint(num), ring.rinv(ring.rint(den)))
            term = coef
            for i, k in enumerate(e):
                if k == 0:
                    continue
                cache = pow_cache[i]
                if k not in cache:
                    cache[k] = ring.rpow(values[i], k)
                term = ring.rmul(term, cache[k])
                if term == 0:
                    break
            acc = ring.radd(acc, term)
        return acc

    def eval_fractions(self, values) -> Fraction:
        acc = Fraction(0)
        for e, c in self.terms.items():
            t = c
            for i, k in enumerate(e):
                if k:
                    t *= values[i] ** k
            acc += t
        return acc

    def __repr__(self):
        bits = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(f"v{i}^{k}" for i, k in enumerate(e) if k)
            bits.append(f"{c}*{mono}" if mono else str(c))
        return " + ".join(bits) if bits else "0"
