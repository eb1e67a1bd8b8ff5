"""Binomial coefficient matrices, their rotations, and exact determinants.

Index sets are strictly increasing tuples of non-negative integers, usually
built from closed intervals; the convention throughout is that an interval
[lo, hi] with lo > hi is empty.
"""

import threading

from .linalg import DimensionMismatchError, Matrix

_pascal_rows = [[1]]
_pascal_lock = threading.Lock()


def interval(lo, hi):
    """Integers lo..hi inclusive, empty when lo > hi."""
    return tuple(range(lo, hi + 1))


def binom(i, j):
    """C(i, j) read from a cached Pascal triangle grown on demand."""
    if j < 0 or j > i:
        return 0
    if i >= len(_pascal_rows):
        with _pascal_lock:
            while len(_pascal_rows) <= i:
                prev = _pascal_rows[-1]
                row = [1]
                row.extend(prev[k] + prev[k + 1] for k in range(len(prev) - 1))
                row.append(1)
                _pascal_rows.append(row)
    return _pascal_rows[i][j]


def pascal(m):
    """The m x m lower-triangular Pascal matrix, entry (i, j) = C(i, j)."""
    if m <= 0:
        raise ValueError(f"pascal size must be positive, got {m}")
    return Matrix([[binom(i, j) for j in range(m)] for i in range(m)])


def _check_index_set(elems, name):
    elems = tuple(elems)
    if not elems:
        raise ValueError(f"empty index set {name}")
    if elems[0] < 0 or any(a >= b for a, b in zip(elems, elems[1:])):
        raise ValueError(f"index set {name} must be strictly increasing and >= 0")
    return elems


def binom_submatrix(rows_i, cols_j):
    """Submatrix B^I_J of the infinite binomial matrix on rows I, columns J."""
    rows_i = _check_index_set(rows_i, "I")
    cols_j = _check_index_set(cols_j, "J")
    return Matrix([[binom(i, j) for j in cols_j] for i in rows_i])


def exchange_matrix(k):
    """The k x k anti-diagonal permutation matrix."""
    return Matrix([[1 if i + j == k - 1 else 0 for j in range(k)] for i in range(k)])


def rotated_matrix(rows_i, cols_j):
    """P^J_I = (B^I_J)^T . Theta_|I|: B^I_J rotated 90 degrees clockwise.

    Rows are indexed by J, columns by I in reverse order.
    """
    rows_i = _check_index_set(rows_i, "I")
    cols_j = _check_index_set(cols_j, "J")
    rev = rows_i[::-1]
    return Matrix([[binom(i, j) for i in rev] for j in cols_j])


def _det_bareiss(rows):
    """Exact integer determinant by fraction-free elimination."""
    n = len(rows)
    if n == 0:
        return 1
    rows = [list(r) for r in rows]
    sign = 1
    prev = 1
    for col in range(n):
        pivot_row = None
        for i in range(col, n):
            if rows[i][col] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            return 0
        if pivot_row != col:
            rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
            sign = -sign
        piv = rows[col][col]
        top = rows[col]
        for i in range(col + 1, n):
            cur = rows[i]
            f = cur[col]
            for j in range(col, n):
                cur[j] = (piv * cur[j] - f * top[j]) // prev
        prev = piv
    return sign * rows[n - 1][n - 1]


def bin_det(rows_i, cols_j):
    """Binomial determinant b^I_J = det(B^I_J); empty index sets give 1."""
    rows_i = tuple(rows_i)
    cols_j = tuple(cols_j)
    if len(rows_i) != len(cols_j):
        raise DimensionMismatchError(
            f"bin_det needs |I| = |J|, got {len(rows_i)} and {len(cols_j)}")
    if not rows_i:
        return 1
    rows_i = _check_index_set(rows_i, "I")
    cols_j = _check_index_set(cols_j, "J")
    return _det_bareiss([[binom(i, j) for j in cols_j] for i in rows_i])
