"""Exact rational matrices: determinants, minors, and total-positivity checks.

Every scalar is a ``fractions.Fraction`` (always stored reduced, positive
denominator), so equality of minor values is a genuine exact predicate.
Floating point is rejected at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Optional

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce an int, string like ``3/4``, or Fraction to an exact rational."""
    if isinstance(value, float):
        raise TypeError("floating point is not allowed in exact paths: %r" % (value,))
    return Fraction(value)


def check_index_tuple(t, bound, name="index tuple"):
    """Validate a 1-based strictly increasing index tuple against a dimension."""
    t = tuple(int(i) for i in t)
    if not t:
        raise ValueError("%s must be nonempty (order-0 minors are not defined)" % name)
    if any(b <= a for a, b in zip(t, t[1:])):
        raise ValueError("%s must be strictly increasing: %r" % (name, t))
    if t[0] < 1 or t[-1] > bound:
        raise ValueError("%s out of range 1..%d: %r" % (name, bound, t))
    return t


class RatMatrix:
    """Immutable dense matrix of exact rationals (row-major)."""

    __slots__ = ("_rows",)

    def __init__(self, rows):
        data = tuple(tuple(rat(e) for e in row) for row in rows)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise ValueError("ragged rows")
        self._rows = data

    @property
    def rows(self):
        return len(self._rows)

    @property
    def cols(self):
        return len(self._rows[0])

    @property
    def entries(self):
        return self._rows

    def __getitem__(self, i):
        return self._rows[i]

    def entry(self, i, j):
        """1-based entry access, A_{ij}."""
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise ValueError("entry (%d,%d) out of range" % (i, j))
        return self._rows[i - 1][j - 1]

    def column(self, j):
        """1-based column as a tuple."""
        if not (1 <= j <= self.cols):
            raise ValueError("column %d out of range" % j)
        return tuple(r[j - 1] for r in self._rows)

    def submatrix(self, I, J):
        """Submatrix A_{I,J} selected by 1-based strictly increasing tuples."""
        I = check_index_tuple(I, self.rows, "row tuple")
        J = check_index_tuple(J, self.cols, "column tuple")
        return RatMatrix(tuple(tuple(self._rows[i - 1][j - 1] for j in J) for i in I))

    def scale_row(self, i, factor):
        """New matrix with 1-based row ``i`` multiplied by ``factor``."""
        factor = rat(factor)
        if not (1 <= i <= self.rows):
            raise ValueError("row %d out of range" % i)
        return RatMatrix(
            tuple(
                tuple(e * factor for e in row) if r == i - 1 else row
                for r, row in enumerate(self._rows)
            )
        )

    def __eq__(self, other):
        return isinstance(other, RatMatrix) and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "RatMatrix(%r)" % (
            [[str(e) for e in row] for row in self._rows],
        )


@dataclass(frozen=True)
class TpVerdict:
    """Outcome of a total-positivity scan.

    ``witness`` is ``(order, I, J, value)`` for the first non-positive minor in
    lexicographic (order, I, J) scan order, or None when ``ok``.
    """

    ok: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.ok


# ---------------------------------------------------------------------------
# determinants


def _clear_denominators(rows):
    """Scale each row to integers; return (int rows, product of scale factors)."""
    int_rows = []
    scale = 1
    for row in rows:
        m = lcm(*(e.denominator for e in row))
        int_rows.append([e.numerator * (m // e.denominator) for e in row])
        scale *= m
    return int_rows, scale


def _det_int_small(m, n):
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    # n == 4: expansion along the first row over 3x3 cofactors
    total = 0
    sign = 1
    for j in range(4):
        sub = [[m[i][c] for c in range(4) if c != j] for i in range(1, 4)]
        total += sign * m[0][j] * _det_int_small(sub, 3)
        sign = -sign
    return total


def det_int(m):
    """Exact determinant of a square integer matrix.

    Cofactor expansion up to order 4, fraction-free (Bareiss) elimination
    beyond; all intermediate values stay integral.
    """
    n = len(m)
    if n <= 4:
        return _det_int_small(m, n)
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det(M: RatMatrix) -> Fraction:
    """Exact determinant of a square rational matrix."""
    if M.rows != M.cols:
        raise ValueError("determinant requires a square matrix, got %dx%d" % (M.rows, M.cols))
    int_rows, scale = _clear_denominators(M.entries)
    return Fraction(det_int(int_rows), scale)


def minor(A: RatMatrix, I, J) -> Fraction:
    """The minor det(A_{I,J}) for 1-based strictly increasing I, J of equal size."""
    I = check_index_tuple(I, A.rows, "row tuple")
    J = check_index_tuple(J, A.cols, "column tuple")
    if len(I) != len(J):
        raise ValueError("row and column tuples must have equal size: %r vs %r" % (I, J))
    return det(A.submatrix(I, J))


# ---------------------------------------------------------------------------
# total positivity


def verify_tp(A: RatMatrix, max_order=None) -> TpVerdict:
    """Exhaustively check that all minors of orders 1..max_order are positive.

    max_order defaults to min(rows, cols) (full TP).  Returns the first
    non-positive minor (deterministic lexicographic scan) as witness.
    """
    if max_order is None:
        max_order = min(A.rows, A.cols)
    for k in range(1, max_order + 1):
        for I in combinations(range(1, A.rows + 1), k):
            for J in combinations(range(1, A.cols + 1), k):
                v = det(A.submatrix(I, J))
                if v <= 0:
                    return TpVerdict(False, (k, I, J, v))
    return TpVerdict(True)


def verify_tp_contiguous(A: RatMatrix) -> TpVerdict:
    """Fast total-positivity check via contiguous (solid) minors only.

    By the classical solid-minor criterion, positivity of all minors on
    consecutive row and column windows already implies full total positivity,
    so the verdict agrees with verify_tp.
    """
    for k in range(1, min(A.rows, A.cols) + 1):
        for i0 in range(1, A.rows - k + 2):
            I = tuple(range(i0, i0 + k))
            for j0 in range(1, A.cols - k + 2):
                J = tuple(range(j0, j0 + k))
                v = det(A.submatrix(I, J))
                if v <= 0:
                    return TpVerdict(False, (k, I, J, v))
    return TpVerdict(True)


def scale_to_unit(A: RatMatrix, I0, J0) -> RatMatrix:
    """Rescale row 1 so that the designated full-height minor becomes 1.

    Requires |I0| = number of rows and minor(A, I0, J0) > 0; every full-height
    minor scales by the same factor, so TP status is preserved.
    """
    I0 = check_index_tuple(I0, A.rows, "row tuple")
    if len(I0) != A.rows:
        raise ValueError("designated minor must be full height (|I0| = rows)")
    m0 = minor(A, I0, J0)
    if m0 <= 0:
        raise ValueError("designated minor must be positive, got %s" % m0)
    if m0 == 1:
        return A
    return A.scale_row(1, Fraction(1, 1) / m0)


# ---------------------------------------------------------------------------
# text format: first line "rows cols", then rows of whitespace-separated
# rationals written as p/q or bare integers; round-trips exactly.


def matrix_to_text(A: RatMatrix) -> str:
    lines = ["%d %d" % (A.rows, A.cols)]
    for row in A.entries:
        lines.append(" ".join(str(e) for e in row))
    return "\n".join(lines) + "\n"


def matrix_from_text(text: str) -> RatMatrix:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix text")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError("first line must be 'rows cols'")
    r, c = int(head[0]), int(head[1])
    if len(lines) != r + 1:
        raise ValueError("expected %d data rows, got %d" % (r, len(lines) - 1))
    rows = []
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != c:
            raise ValueError("expected %d entries per row, got %d" % (c, len(toks)))
        rows.append([Fraction(t) for t in toks])
    return RatMatrix(rows)
