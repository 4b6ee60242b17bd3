"""Dense univariate polynomials over an exact field.

Coefficients are stored in ascending powers and kept in canonical form:
the highest stored coefficient is nonzero, and the zero polynomial has an
empty coefficient tuple with degree NEG_INF.
"""

from __future__ import annotations

from .errors import (
    DegreeTooSmall,
    DimensionMismatch,
    DivisionByZero,
    FieldMismatch,
)
from .field import Field

# Degree of the zero polynomial; compares strictly below every integer.
NEG_INF = float("-inf")


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def monomial(cls, field, k, c=None):
        if c is None:
            c = field.one
        return cls(field, [field.zero] * k + [c])

    @classmethod
    def from_ints(cls, field, ints):
        return cls(field, [field.canonical(i) for i in ints])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def leading(self):
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field!r} vs {other.field!r}")

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __add__(self, other):
        self._check(other)
        f = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly(f, out)

    def __sub__(self, other):
        self._check(other)
        f = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            f, [f.sub(self.coeff(i), other.coeff(i)) for i in range(n)]
        )

    def __neg__(self):
        f = self.field
        return Poly(f, [f.neg(c) for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        self._check(other)
        f = self.field
        if not self.coeffs or not other.coeffs:
            return Poly.zero(f)
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Poly(f, out)

    def scale(self, c):
        f = self.field
        return Poly(f, [f.mul(c, a) for a in self.coeffs])

    def shift(self, k: int):
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly(self.field, [self.field.zero] * k + list(self.coeffs))

    def __divmod__(self, other):
        self._check(other)
        f = self.field
        if not other.coeffs:
            raise DivisionByZero("polynomial division by zero")
        if len(self.coeffs) < len(other.coeffs):
            return Poly.zero(f), self
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = f.inverse(other.coeffs[-1])
        q = [f.zero] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if not c:
                continue
            coef = f.mul(c, inv_lead)
            q[i - db] = coef
            for j, bc in enumerate(other.coeffs):
                r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, bc))
        return Poly(f, q), Poly(f, r[:db])

    def monic(self):
        return self.scale(self.field.inverse(self.leading()))

    def reverse_at(self, d: int):
        """The reversal x^d * f(1/x); coefficient i becomes coefficient d-i."""
        if self.coeffs and d < self.degree:
            raise DegreeTooSmall(f"reversal degree {d} < deg {self.degree}")
        return Poly(self.field, [self.coeff(d - i) for i in range(d + 1)])

    def eval(self, x):
        f = self.field
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return acc

    def eval_operator(self, apply, seed):
        """Evaluate at a linear operator applied to a seed vector.

        Horner over vectors: deg-many applications of the operator, returning
        sum_i coeff_i * apply^i(seed).
        """
        f = self.field
        if not self.coeffs:
            return [f.zero] * len(seed)
        acc = [f.mul(self.coeffs[-1], s) for s in seed]
        for c in reversed(self.coeffs[:-1]):
            acc = apply(acc)
            if len(acc) != len(seed):
                raise DimensionMismatch("operator changed vector length")
            acc = [f.add(v, f.mul(c, s)) for v, s in zip(acc, seed)]
        return acc

    # -- text forms ---------------------------------------------------------

    def to_ascending(self) -> str:
        if not self.coeffs:
            return "0"
        return " ".join(self.field.format(c) for c in self.coeffs)

    def to_pretty(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                parts.append(self.field.format(c))
            else:
                x = "x" if i == 1 else f"x^{i}"
                if c == self.field.one:
                    parts.append(x)
                else:
                    parts.append(f"{self.field.format(c)}*{x}")
        return " + ".join(parts)

    @classmethod
    def parse_ascending(cls, field, text: str):
        return cls(field, [field.parse(t) for t in text.split()])

    def __repr__(self):
        return f"Poly({self.field!r}, {self.to_pretty()})"
