"""Exact dense linear algebra over the rationals.

Forward elimination is fraction-free (integer Bareiss after clearing row
denominators); back substitution runs in exact rational arithmetic.  No
floating point anywhere.
"""

from fractions import Fraction
from math import gcd


class DimensionMismatchError(ValueError):
    """Operand shapes do not line up."""


class SingularMatrixError(ArithmeticError):
    """A system expected to be uniquely solvable turned out singular."""


def _norm(c):
    """Collapse integral Fractions to int so plain arithmetic stays fast."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Matrix:
    """Dense matrix with exact integer or rational entries."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = [list(row) for row in data]
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionMismatchError("ragged rows")
            if cols is not None and cols != width:
                raise DimensionMismatchError("cols does not match row width")
            cols = width
        elif cols is None:
            cols = 0
        self.rows = len(data)
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, m):
        return cls([[1 if i == j else 0 for j in range(m)] for i in range(m)])

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.rows)]
                       for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        return Matrix([[sum(self.data[i][k] * other.data[k][j]
                            for k in range(self.cols))
                        for j in range(other.cols)]
                       for i in range(self.rows)], cols=other.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        return all(self.data[i][j] == other.data[i][j]
                   for i in range(self.rows) for j in range(self.cols))

    def __repr__(self):
        return f"Matrix({self.data!r})"


def mat_vec(mat, vec):
    if len(vec) != mat.cols:
        raise DimensionMismatchError("vector length does not match column count")
    return [_norm(sum(row[j] * vec[j] for j in range(mat.cols))) for row in mat.data]


def _integer_rows(rows):
    """Scale each row to integer entries; row scaling preserves rank and kernels."""
    out = []
    for row in rows:
        scale = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                scale = scale * x.denominator // gcd(scale, x.denominator)
        if scale == 1:
            out.append([int(x) for x in row])
        else:
            out.append([int(x * scale) for x in row])
    return out


def _echelon(rows_in, ncols):
    """Fraction-free (Bareiss) row echelon form.

    Returns (rows, pivot_cols) where rows are integer echelon rows; entry
    growth is bounded by minors of the input, and every division is exact.
    """
    rows = _integer_rows(rows_in)
    nrows = len(rows)
    pivot_cols = []
    prev = 1
    lead = 0
    for col in range(ncols):
        pivot_row = None
        for i in range(lead, nrows):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        rows[lead], rows[pivot_row] = rows[pivot_row], rows[lead]
        piv = rows[lead][col]
        top = rows[lead]
        for i in range(lead + 1, nrows):
            cur = rows[i]
            f = cur[col]
            for j in range(col, ncols):
                cur[j] = (piv * cur[j] - f * top[j]) // prev
        prev = piv
        pivot_cols.append(col)
        lead += 1
        if lead == nrows:
            break
    return rows, pivot_cols


def rank(mat):
    """Exact rank by fraction-free elimination."""
    if mat.rows == 0 or mat.cols == 0:
        return 0
    _, pivots = _echelon(mat.data, mat.cols)
    return len(pivots)


def _back_substitute(rows, pivot_cols, vec, ncols):
    """Fill pivot coordinates of vec (free coordinates already set)."""
    for i in reversed(range(len(pivot_cols))):
        pc = pivot_cols[i]
        row = rows[i]
        acc = 0
        for j in range(pc + 1, ncols):
            vj = vec[j]
            if vj:
                acc += row[j] * vj
        vec[pc] = _norm(Fraction(-acc, row[pc]) if not isinstance(acc, Fraction)
                        else -acc / row[pc])
    return vec


def kernel_basis(mat):
    """Basis of the right null space; its length is cols - rank."""
    ncols = mat.cols
    if ncols == 0:
        return []
    if mat.rows == 0:
        return [[1 if j == f else 0 for j in range(ncols)] for f in range(ncols)]
    rows, pivot_cols = _echelon(mat.data, ncols)
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [0] * ncols
        vec[free] = 1
        basis.append(_back_substitute(rows, pivot_cols, vec, ncols))
    return basis


def solve_unique(mat, rhs):
    """Solve A x = b for square nonsingular A; the solution is re-verified.

    Raises SingularMatrixError when det(A) = 0 and DimensionMismatchError on
    shape problems.
    """
    if mat.rows != mat.cols:
        raise DimensionMismatchError("solve_unique requires a square matrix")
    if len(rhs) != mat.rows:
        raise DimensionMismatchError("right-hand side length mismatch")
    n = mat.rows
    if n == 0:
        return []
    aug = [list(mat.data[i]) + [rhs[i]] for i in range(n)]
    rows, pivot_cols = _echelon(aug, n + 1)
    if pivot_cols != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    sol = [0] * (n + 1)
    sol[n] = -1
    _back_substitute(rows, pivot_cols, sol, n + 1)
    sol = sol[:n]
    for i in range(n):
        if sum(mat.data[i][j] * sol[j] for j in range(n)) != rhs[i]:
            raise SingularMatrixError("residual check failed")
    return sol
