"""Incremental minimal-polynomial computation with on-demand terms.

The Euclid computation runs against a growing reversed series. After each
two-term extension the most recent division step is discarded and the
remainders are rebuilt from the retained Bezout cofactors, so earlier
quotients are reused instead of restarting from scratch. A pluggable
verifier decides when the current candidate is accepted.
"""

from __future__ import annotations

from .errors import BadInput, NotLinearlyRecurrent, SeqMinPolyError
from .field import Field
from .hankel import is_generating
from .polynomial import Poly
from .sequences import SequenceOracle, SparseMatrix, spmv


class LazyState:
    """Single-owner resumable Euclid computation over 2l consumed terms.

    Cofactor pairs (u0, v0) and (u1, v1) are paired with R0 and R1 under
    S0 = x^(2l) and the reversed series S1; (u_prev, v_prev) is the
    generation before (u0, v0) when a division step has happened since the
    last rebuild, else None.
    """

    def __init__(self, oracle: SequenceOracle, field: Field, l0: int):
        if l0 < 1:
            raise BadInput(f"initial bound must be >= 1, got {l0}")
        self.oracle = oracle
        self.field = field
        self.consumed = []
        for _ in range(2 * l0):
            self.consumed.append(oracle.next_term())
        self.l = l0
        self.S0 = Poly.monomial(field, 2 * l0)
        self.S1 = Poly(field, list(reversed(self.consumed)))
        self.R0 = self.S0
        self.R1 = self.S1
        self.u0, self.v0 = Poly.one(field), Poly.zero(field)
        self.u1, self.v1 = Poly.zero(field), Poly.one(field)
        self.u_prev = None
        self.v_prev = None

    def draw(self):
        term = self.oracle.next_term()
        self.consumed.append(term)
        return term

    def ensure(self, count: int):
        """Make sure at least count terms are cached."""
        while len(self.consumed) < count:
            self.draw()

    def bezout_holds(self) -> bool:
        return (
            self.u0 * self.S0 + self.v0 * self.S1 == self.R0
            and self.u1 * self.S0 + self.v1 * self.S1 == self.R1
        )

    def _require_bezout(self):
        if not self.bezout_holds():
            raise SeqMinPolyError("Bezout invariant broken (internal error)")


def lazy_init(oracle: SequenceOracle, field: Field, l0: int) -> LazyState:
    return LazyState(oracle, field, l0)


def lazy_advance(state: LazyState) -> Poly:
    """Divide until deg R1 < l and return the monic candidate."""
    while state.l <= state.R1.degree:
        q, r = divmod(state.R0, state.R1)
        u_new = state.u0 - q * state.u1
        v_new = state.v0 - q * state.v1
        state.u_prev, state.v_prev = state.u0, state.v0
        state.u0, state.v0 = state.u1, state.v1
        state.u1, state.v1 = u_new, v_new
        state.R0 = state.R1
        state.R1 = r
        state._require_bezout()
    return state.v1.monic() if state.v1 else Poly.one(state.field)


def lazy_extend(state: LazyState) -> None:
    """Grow by two terms, reusing every quotient but the most recent one.

    The two new series terms may already sit in the cache when a verifier
    drew ahead; the oracle is only queried for genuinely new indices.
    """
    state.ensure(2 * state.l + 2)
    a = state.consumed[2 * state.l]
    b = state.consumed[2 * state.l + 1]
    state.l += 1
    state.S0 = state.S0.shift(2)
    state.S1 = state.S1.shift(2) + Poly(state.field, [b, a])
    if state.u_prev is not None:
        # Discard the last division step: shift the generations back one.
        state.u1, state.v1 = state.u0, state.v0
        state.u0, state.v0 = state.u_prev, state.v_prev
        state.u_prev = state.v_prev = None
    state.R0 = state.u0 * state.S0 + state.v0 * state.S1
    state.R1 = state.u1 * state.S0 + state.v1 * state.S1
    state._require_bezout()


class Verifier:
    """Certifies a candidate minimal polynomial; may consume oracle terms."""

    def certify(self, candidate: Poly, state: LazyState) -> bool:
        raise NotImplementedError


class GeneratingVerifier(Verifier):
    """Accepts when the candidate generates all consumed terms plus a few
    freshly drawn ones. Heuristic until the full 2m-term prefix is seen."""

    def __init__(self, extra: int = 2):
        if extra < 1:
            raise BadInput(f"extra term count must be >= 1, got {extra}")
        self.extra = extra

    def certify(self, candidate, state):
        for _ in range(self.extra):
            state.draw()
        if candidate.degree + 1 > len(state.consumed):
            return False
        return is_generating(state.consumed, candidate)


class AnnihilationVerifier(Verifier):
    """Accepts when the candidate annihilates a seed vector under a matrix."""

    def __init__(self, matrix: SparseMatrix, seed):
        self.matrix = matrix
        self.seed = list(seed)

    def certify(self, candidate, state):
        image = candidate.eval_operator(lambda x: spmv(self.matrix, x), self.seed)
        return not any(image)


def default_verifier(extra: int = 2) -> Verifier:
    return GeneratingVerifier(extra)


def matrix_verifier(matrix: SparseMatrix, seed) -> Verifier:
    return AnnihilationVerifier(matrix, seed)


def lazy_minpoly(
    oracle: SequenceOracle,
    field: Field,
    m: int,
    l0: int | None = None,
    verifier: Verifier | None = None,
    on_extend=None,
) -> Poly:
    """Drive init/advance/extend until the verifier accepts or l reaches m.

    At l = m the computation has seen a full 2m-term prefix and the
    candidate is returned after a mandatory generating check; on_extend
    (when given) observes the state after every extension.
    """
    if m < 1:
        raise BadInput(f"degree bound must be >= 1, got {m}")
    if l0 is None:
        l0 = max(1, m // 4)
    if not 1 <= l0 <= m:
        raise BadInput(f"initial bound {l0} outside [1, {m}]")
    if verifier is None:
        verifier = GeneratingVerifier()
    state = lazy_init(oracle, field, l0)
    while True:
        candidate = lazy_advance(state)
        if state.l >= m:
            if not is_generating(state.consumed, candidate):
                raise NotLinearlyRecurrent("no generating polynomial of degree <= m")
            return candidate
        if verifier.certify(candidate, state):
            return candidate
        lazy_extend(state)
        if on_extend is not None:
            on_extend(state)
