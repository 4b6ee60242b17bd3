"""Hankel-matrix ground truth for minimal polynomials.

Deliberately the slow, trusted path: dense matrices, plain Gaussian
elimination over the exact field, and the window-by-window generating
test. The fast algorithms are cross-checked against this module.
"""

from __future__ import annotations

from .errors import BadInput, InsufficientTerms, NotLinearlyRecurrent
from .field import Field
from .polynomial import Poly


class DenseMatrix:
    __slots__ = ("field", "data")

    def __init__(self, field: Field, rows):
        rows = [list(r) for r in rows]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise BadInput("ragged matrix rows")
        self.field = field
        self.data = rows

    @property
    def rows(self):
        return len(self.data)

    @property
    def cols(self):
        return len(self.data[0]) if self.data else 0

    def mul_vec(self, x):
        f = self.field
        if len(x) != self.cols:
            raise BadInput("vector length does not match column count")
        out = []
        for row in self.data:
            acc = f.zero
            for a, b in zip(row, x):
                acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return out

    def __repr__(self):
        return f"DenseMatrix({self.rows}x{self.cols})"


def hankel(field: Field, terms, i: int, r: int, p: int) -> DenseMatrix:
    """The r x p Hankel matrix with entry (j, k) = terms[i + j + k]."""
    if len(terms) < i + r + p - 1:
        raise InsufficientTerms(
            f"need {i + r + p - 1} terms for the Hankel block, have {len(terms)}"
        )
    return DenseMatrix(field, [[terms[i + j + k] for k in range(p)] for j in range(r)])


def matrix_rank(m: DenseMatrix) -> int:
    """Rank by exact Gaussian elimination, first nonzero pivot per column."""
    f = m.field
    a = [row[:] for row in m.data]
    rank = 0
    for col in range(m.cols):
        pivot = next((r for r in range(rank, m.rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = f.inverse(a[rank][col])
        for r in range(rank + 1, m.rows):
            c = a[r][col]
            if not c:
                continue
            factor = f.mul(c, inv)
            for k in range(col, m.cols):
                a[r][k] = f.sub(a[r][k], f.mul(factor, a[rank][k]))
        rank += 1
    return rank


def solve(m: DenseMatrix, b):
    """Some x with m*x = b, or None when the system is inconsistent.

    Free variables are set to zero.
    """
    f = m.field
    if len(b) != m.rows:
        raise BadInput("right-hand side length does not match row count")
    a = [row[:] + [rhs] for row, rhs in zip(m.data, b)]
    ncols = m.cols
    pivots = []
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, m.rows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = f.inverse(a[rank][col])
        a[rank] = [f.mul(inv, v) for v in a[rank]]
        for r in range(m.rows):
            if r == rank or not a[r][col]:
                continue
            factor = a[r][col]
            a[r] = [f.sub(v, f.mul(factor, w)) for v, w in zip(a[r], a[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, m.rows):
        if a[r][ncols]:
            return None
    x = [f.zero] * ncols
    for r, col in enumerate(pivots):
        x[col] = a[r][ncols]
    return x


def is_generating(terms, poly: Poly) -> bool:
    """True iff every available window of terms satisfies the recurrence."""
    return first_failing_window(terms, poly) is None


def first_failing_window(terms, poly: Poly):
    """Index j of the first window violating the recurrence, or None."""
    if not poly:
        raise BadInput("the zero polynomial generates nothing")
    f = poly.field
    d = poly.degree
    if len(terms) < d + 1:
        raise InsufficientTerms(f"need {d + 1} terms, have {len(terms)}")
    for j in range(len(terms) - d):
        acc = f.zero
        for i, p in enumerate(poly.coeffs):
            acc = f.add(acc, f.mul(p, terms[j + i]))
        if acc:
            return j
    return None


def minpoly_hankel(field: Field, terms, n: int) -> Poly:
    """Minimal polynomial via Hankel rank plus one exact linear solve.

    Requires exactly 2n terms; n must bound the minimal degree, which is
    checked after the fact via the generating test.
    """
    if n < 1 or len(terms) != 2 * n:
        raise BadInput(f"need exactly 2n terms with n >= 1, got n={n}, {len(terms)} terms")
    d = matrix_rank(hankel(field, terms, 0, n, n))
    if d == 0:
        return Poly.one(field)
    g = solve(hankel(field, terms, 0, d, d), terms[d : 2 * d])
    if g is None:
        raise NotLinearlyRecurrent("the d x d Hankel system is inconsistent")
    poly = Poly(field, [field.neg(c) for c in g] + [field.one])
    if not is_generating(terms, poly):
        raise NotLinearlyRecurrent("candidate fails the generating test")
    return poly
