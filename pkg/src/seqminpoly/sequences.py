"""Sequence producers: explicit lists, recurrences, and Krylov projections.

All oracles serve terms a_0, a_1, ... strictly in order and are
deterministic: reset() followed by re-serving yields the same prefix.
"""

from __future__ import annotations

from .errors import (
    BadInitLength,
    BadInput,
    DimensionMismatch,
    NotMonic,
    OracleExhausted,
)
from .field import Field
from .polynomial import Poly


class SequenceOracle:
    """On-demand producer of sequence terms."""

    def __init__(self):
        self.terms_served = 0

    def next_term(self):
        term = self._produce(self.terms_served)
        self.terms_served += 1
        return term

    def _produce(self, t: int):
        raise NotImplementedError

    def reset(self):
        self.terms_served = 0


class ListOracle(SequenceOracle):
    def __init__(self, terms):
        super().__init__()
        self._terms = list(terms)

    def _produce(self, t):
        if t >= len(self._terms):
            raise OracleExhausted(f"list oracle holds only {len(self._terms)} terms")
        return self._terms[t]


class RecurrenceOracle(SequenceOracle):
    """Unbounded oracle driven forward by a monic recurrence."""

    def __init__(self, poly: Poly, init):
        super().__init__()
        if not poly or poly.leading() != poly.field.one:
            raise NotMonic("recurrence polynomial must be monic")
        if len(init) != poly.degree:
            raise BadInitLength(
                f"need {poly.degree} initial terms, got {len(init)}"
            )
        self._poly = poly
        self._history = list(init)

    def _produce(self, t):
        f = self._poly.field
        d = self._poly.degree
        while t >= len(self._history):
            j = len(self._history) - d
            acc = f.zero
            for i in range(d):
                acc = f.add(acc, f.mul(self._poly.coeffs[i], self._history[j + i]))
            self._history.append(f.neg(acc))
        return self._history[t]


class SparseMatrix:
    """Immutable triple-form sparse matrix over an exact field."""

    __slots__ = ("field", "rows", "cols", "triples")

    def __init__(self, field: Field, rows: int, cols: int, triples):
        seen = {}
        for r, c, v in triples:
            if not (0 <= r < rows and 0 <= c < cols):
                raise BadInput(f"entry ({r}, {c}) out of range for {rows}x{cols}")
            if (r, c) in seen:
                raise BadInput(f"duplicate entry at ({r}, {c})")
            if v:
                seen[(r, c)] = v
        self.field = field
        self.rows = rows
        self.cols = cols
        self.triples = seen

    def __repr__(self):
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={len(self.triples)})"


def spmv(m: SparseMatrix, x):
    if m.cols != len(x):
        raise DimensionMismatch(f"matrix has {m.cols} columns, vector length {len(x)}")
    f = m.field
    out = [f.zero] * m.rows
    for (r, c), v in m.triples.items():
        out[r] = f.add(out[r], f.mul(v, x[c]))
    return out


def dot(field, u, v):
    if len(u) != len(v):
        raise DimensionMismatch("dot product length mismatch")
    acc = field.zero
    for a, b in zip(u, v):
        acc = field.add(acc, field.mul(a, b))
    return acc


class KrylovOracle(SequenceOracle):
    """Serves a_t = u . (M^t v) with one sparse product per new term.

    Only the current Krylov vector is cached, not the whole basis.
    """

    def __init__(self, matrix: SparseMatrix, u, v):
        super().__init__()
        if matrix.rows != matrix.cols:
            raise DimensionMismatch("Krylov projection needs a square matrix")
        if len(u) != matrix.rows or len(v) != matrix.rows:
            raise DimensionMismatch("projection vectors must match matrix size")
        self._matrix = matrix
        self._u = list(u)
        self._v = list(v)
        self._w = list(v)

    def _produce(self, t):
        val = dot(self._matrix.field, self._u, self._w)
        self._w = spmv(self._matrix, self._w)
        return val

    def reset(self):
        super().reset()
        self._w = list(self._v)


def from_list(terms) -> ListOracle:
    return ListOracle(terms)


def from_recurrence(poly: Poly, init) -> RecurrenceOracle:
    return RecurrenceOracle(poly, init)


def krylov_oracle(matrix: SparseMatrix, u, v) -> KrylovOracle:
    return KrylovOracle(matrix, u, v)


def companion(poly: Poly) -> SparseMatrix:
    """Companion matrix of a monic polynomial of degree >= 1."""
    if not poly or poly.leading() != poly.field.one or poly.degree < 1:
        raise NotMonic("companion matrix needs a monic polynomial of degree >= 1")
    f = poly.field
    d = poly.degree
    triples = [(i + 1, i, f.one) for i in range(d - 1)]
    triples += [(i, d - 1, f.neg(poly.coeffs[i])) for i in range(d) if poly.coeffs[i]]
    return SparseMatrix(f, d, d, triples)


def block_diagonal(blocks) -> SparseMatrix:
    """Block-diagonal assembly of square sparse matrices over one field."""
    if not blocks:
        raise BadInput("need at least one block")
    f = blocks[0].field
    size = sum(b.rows for b in blocks)
    triples = []
    offset = 0
    for b in blocks:
        if b.rows != b.cols or b.field != f:
            raise BadInput("blocks must be square and over the same field")
        triples += [(r + offset, c + offset, v) for (r, c), v in b.triples.items()]
        offset += b.rows
    return SparseMatrix(f, size, size, triples)


# -- text formats -----------------------------------------------------------


def parse_matrix(field: Field, text: str) -> SparseMatrix:
    """First line "rows cols nnz", then nnz lines "r c value" (0-indexed)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise BadInput("empty matrix text")
    header = lines[0].split()
    if len(header) != 3:
        raise BadInput(f"bad matrix header {lines[0]!r}")
    try:
        rows, cols, nnz = (int(h) for h in header)
    except ValueError as exc:
        raise BadInput(f"bad matrix header {lines[0]!r}") from exc
    if len(lines) - 1 != nnz:
        raise BadInput(f"header promises {nnz} entries, found {len(lines) - 1}")
    triples = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise BadInput(f"bad matrix entry {ln!r}")
        try:
            r, c = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BadInput(f"bad matrix entry {ln!r}") from exc
        triples.append((r, c, field.parse(parts[2])))
    return SparseMatrix(field, rows, cols, triples)


def parse_vector(field: Field, text: str):
    return [field.parse(t) for t in text.split()]


def format_vector(field: Field, vec) -> str:
    return " ".join(field.format(v) for v in vec)
