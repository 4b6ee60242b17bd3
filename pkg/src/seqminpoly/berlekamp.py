"""Batch minimal-polynomial synthesis via the extended Euclidean algorithm.

Two variants share one instrumented Euclid engine. Both start from
R0 = x^(2n); the "usual" variant feeds the series in natural order and
reverses the cofactor on exit, the "modified" variant feeds the reversed
series and reads the answer directly off the cofactor.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadInput, DivisionByZero, NotLinearlyRecurrent, SeqMinPolyError
from .field import Field
from .hankel import is_generating
from .polynomial import NEG_INF, Poly


@dataclass(frozen=True)
class EuclidState:
    """Two consecutive generations of remainders and Bezout cofactors.

    Invariant after every step: U0*A + V0*B = R0, U1*A + V1*B = R1, and
    deg R1 < deg R0.
    """

    R0: Poly
    R1: Poly
    U0: Poly
    V0: Poly
    U1: Poly
    V1: Poly
    A: Poly
    B: Poly
    steps: int
    quotients: tuple

    def bezout_holds(self) -> bool:
        return (
            self.U0 * self.A + self.V0 * self.B == self.R0
            and self.U1 * self.A + self.V1 * self.B == self.R1
        )


def euclid_init(a: Poly, b: Poly) -> EuclidState:
    if not a:
        raise DivisionByZero("first Euclid input must be nonzero")
    f = a.field
    one = Poly.one(f)
    zero = Poly.zero(f)
    return EuclidState(
        R0=a, R1=b, U0=one, V0=zero, U1=zero, V1=one,
        A=a, B=b, steps=0, quotients=(),
    )


def euclid_step(s: EuclidState) -> EuclidState:
    q, r = divmod(s.R0, s.R1)
    return EuclidState(
        R0=s.R1,
        R1=r,
        U0=s.U1,
        V0=s.V1,
        U1=s.U0 - q * s.U1,
        V1=s.V0 - q * s.V1,
        A=s.A,
        B=s.B,
        steps=s.steps + 1,
        quotients=s.quotients + (q,),
    )


def euclid_run(s: EuclidState, threshold: int, on_step=None) -> EuclidState:
    """Divide until deg R1 < threshold; the Bezout identity is re-checked
    after every step and on_step (when given) sees each intermediate state."""
    while threshold <= s.R1.degree:
        s = euclid_step(s)
        if not s.bezout_holds():
            raise SeqMinPolyError("Bezout invariant broken (internal error)")
        if on_step is not None:
            on_step(s)
    return s


def reversed_series(field: Field, terms) -> Poly:
    """The reversed series: coefficient i is terms[len-1-i]."""
    return Poly(field, list(reversed(terms)))


def _check_input(n, terms):
    if not isinstance(n, int) or n < 1:
        raise BadInput(f"degree bound must be a positive integer, got {n!r}")
    if len(terms) != 2 * n:
        raise BadInput(f"need exactly {2 * n} terms, got {len(terms)}")


def bm_modified(field: Field, n: int, terms) -> Poly:
    """Minimal polynomial from the first 2n terms, reversed-series variant."""
    _check_input(n, terms)
    s = euclid_init(Poly.monomial(field, 2 * n), reversed_series(field, terms))
    s = euclid_run(s, n)
    poly = s.V1.monic()
    if poly.degree > n or not is_generating(terms, poly):
        raise NotLinearlyRecurrent("no generating polynomial of degree <= n")
    return poly


def bm_usual(field: Field, n: int, terms) -> Poly:
    """Minimal polynomial from the first 2n terms, natural-order variant.

    Runs the same Euclid engine on the unreversed series and reverses the
    cofactor at degree d = max(deg V1, 1 + deg R1) on exit.
    """
    _check_input(n, terms)
    s = euclid_init(Poly.monomial(field, 2 * n), Poly(field, terms))
    s = euclid_run(s, n)
    dr = s.R1.degree
    d = max(s.V1.degree, dr + 1 if dr != NEG_INF else 0)
    poly = s.V1.reverse_at(d).monic()
    if poly.degree > n or not is_generating(terms, poly):
        raise NotLinearlyRecurrent("no generating polynomial of degree <= n")
    return poly
