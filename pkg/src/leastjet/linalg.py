"""Dense exact linear algebra over Gaussian rationals.

Everything is reduced row echelon form with full pivoting determinism:
scan columns left to right, take the first row with a nonzero entry.  No
magnitude heuristics; equality with zero is exact.
"""

from __future__ import annotations

from .errors import SingularMatrix
from .scalar import Scalar, as_scalar


def rref(rows):
    """In-place reduced row echelon form; returns the pivot column list."""
    if not rows:
        return []
    n_rows = len(rows)
    n_cols = len(rows[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if not rows[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        inv = rows[r][c]
        if inv != 1:
            rows[r] = [x / inv for x in rows[r]]
        for i in range(n_rows):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return pivots


def rank(rows):
    work = [list(row) for row in rows]
    return len(rref(work))


def identity(n):
    return [[Scalar(1) if i == j else Scalar(0) for j in range(n)]
            for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            s = Scalar(0)
            for t in range(k):
                s = s + a[i][t] * b[t][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    return [sum((a[i][j] * v[j] for j in range(len(v))), Scalar(0))
            for i in range(len(a))]


def solve(a, b):
    """Unique solution of the square system a x = b."""
    n = len(a)
    work = [[as_scalar(x) for x in row] + [as_scalar(b[i])]
            for i, row in enumerate(a)]
    pivots = rref(work)
    if pivots != list(range(n)):
        raise SingularMatrix("coefficient matrix is singular")
    return [work[i][n] for i in range(n)]


def inverse(a):
    n = len(a)
    work = [[as_scalar(x) for x in row] + ident_row
            for row, ident_row in zip(a, identity(n))]
    pivots = rref(work)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return [row[n:] for row in work]


def determinant(a):
    """Exact determinant by fraction-producing Gaussian elimination."""
    n = len(a)
    work = [[as_scalar(x) for x in row] for row in a]
    det = Scalar(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if not work[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            return Scalar(0)
        if pivot_row != c:
            work[c], work[pivot_row] = work[pivot_row], work[c]
            det = -det
        det = det * work[c][c]
        inv = work[c][c]
        for i in range(c + 1, n):
            if not work[i][c].is_zero():
                f = work[i][c] / inv
                work[i] = [x - f * y for x, y in zip(work[i], work[c])]
    return det


def kernel_basis(rows, n_cols):
    """Basis of the right kernel {v : rows . v = 0}, canonical RREF-derived
    vectors with a 1 in each free column."""
    work = [list(row) for row in rows]
    pivots = rref(work)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [Scalar(0)] * n_cols
        v[f] = Scalar(1)
        for r, p in enumerate(pivots):
            v[p] = -work[r][f]
        basis.append(v)
    return basis


class Echelon:
    """Incrementally maintained reduced row echelon form.

    ``add`` reduces the vector against the current rows and either absorbs
    it (returning True) or reports dependence (False).  Rows keep pivot
    entries equal to 1 and stay mutually reduced.
    """

    def __init__(self, n_cols):
        self.n_cols = n_cols
        self.rows = []
        self.pivots = []

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vector):
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            f = v[p]
            if not f.is_zero():
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def add(self, vector):
        v = self.reduce(vector)
        pivot = next((c for c in range(self.n_cols)
                      if not v[c].is_zero()), None)
        if pivot is None:
            return False
        inv = v[pivot]
        if inv != 1:
            v = [a / inv for a in v]
        for i, row in enumerate(self.rows):
            f = row[pivot]
            if not f.is_zero():
                self.rows[i] = [a - f * b for a, b in zip(row, v)]
        at = next((i for i, p in enumerate(self.pivots) if p > pivot),
                  len(self.pivots))
        self.rows.insert(at, v)
        self.pivots.insert(at, pivot)
        return True


def in_row_span(rows, vector):
    """Exact membership of ``vector`` in the row space of ``rows``
    (rows assumed in RREF with known pivots would be faster; this is the
    general entry point)."""
    work = [list(r) for r in rows]
    base_rank = len(rref(work))
    work.append(list(vector))
    return len(rref(work)) == base_rank
