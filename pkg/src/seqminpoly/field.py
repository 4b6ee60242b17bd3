"""Exact coefficient fields: the rationals and prime fields GF(p).

Elements are plain Python values (`fractions.Fraction` for the rationals,
`int` residues in [0, p-1] for GF(p)); all arithmetic goes through a Field
object so polynomials stay field-agnostic.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    BadInput,
    DivisionByZero,
    NonInvertibleDenominator,
    ParseError,
    ZeroDenominator,
)

# Unicode minus shows up in copy-pasted math; normalize before parsing.
_MINUS = str.maketrans({"−": "-"})

MAX_MODULUS = 2**31


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


class Field:
    """Interface implemented by both coefficient domains."""

    kind: str
    modulus: int | None

    def canonical(self, num, den=1):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inverse(b))

    def parse(self, token: str):
        raise NotImplementedError

    def format(self, a) -> str:
        raise NotImplementedError


class RationalField(Field):
    kind = "rationals"
    modulus = None
    zero = Fraction(0)
    one = Fraction(1)

    def canonical(self, num, den=1):
        if den == 0:
            raise ZeroDenominator("zero denominator over the rationals")
        return Fraction(num, den)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inverse(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    def parse(self, token):
        token = token.translate(_MINUS)
        try:
            return Fraction(token)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational token {token!r}") from exc

    def format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or p >= MAX_MODULUS:
            raise BadInput(f"modulus must be an integer in [2, 2^31): {p!r}")
        if not _is_prime(p):
            raise BadInput(f"modulus {p} is not prime")
        self.modulus = p
        self.zero = 0
        self.one = 1 % p

    def canonical(self, num, den=1):
        p = self.modulus
        if den % p == 0:
            raise NonInvertibleDenominator(f"denominator {den} not invertible mod {p}")
        if den == 1:
            return num % p
        return num * pow(den, -1, p) % p

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def inverse(self, a):
        if a % self.modulus == 0:
            raise DivisionByZero(f"inverse of zero mod {self.modulus}")
        return pow(a, -1, self.modulus)

    def parse(self, token):
        token = token.translate(_MINUS)
        try:
            return int(token, 10) % self.modulus
        except ValueError as exc:
            raise ParseError(f"bad GF({self.modulus}) token {token!r}") from exc

    def format(self, a):
        return str(a % self.modulus)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.modulus == self.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return f"GF({self.modulus})"


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_text(text: str) -> Field:
    """Parse a field description: "Q" for the rationals, "gf:p" for GF(p)."""
    t = text.strip()
    if t.lower() in ("q", "qq", "rationals"):
        return QQ
    if t.lower().startswith("gf:"):
        try:
            p = int(t[3:], 10)
        except ValueError as exc:
            raise ParseError(f"bad field spec {text!r}") from exc
        return GF(p)
    raise ParseError(f"bad field spec {text!r} (expected 'Q' or 'gf:<prime>')")
