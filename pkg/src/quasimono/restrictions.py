"""Restrictions of the curve map to weight slices and their good kernels.

For a member r < la the slice W_r maps into the span of t^(r+kq),
k = 0..phi_1; the matrix of that map in the staircase basis is the rotated
binomial matrix P^H_I.  An index k is r-good when t^(r+kq) is unreachable
from any higher slice, so coordinates at good indices of anything that
extends to a kernel element must vanish.
"""

from dataclasses import dataclass

from .binomials import bin_det, interval, rotated_matrix
from .linalg import Matrix, kernel_basis, rank
from .polynomials import Poly3, basis_combination, wr_basis
from .semigroup import NotInSemigroupError, profile


class IndexOutOfRangeError(ValueError):
    """An index set escapes [0, phi_1]."""


class WrongCardinalityError(ValueError):
    """The index set does not have the cardinality the formula needs."""


@dataclass(frozen=True)
class RestrictionMatrix:
    """Matrix of the restriction to coordinates L in the staircase bases."""

    r: int
    l_set: tuple
    matrix: Matrix


@dataclass(frozen=True)
class GoodSet:
    r: int
    elements: tuple


def _slice_profile(ctx, r):
    if r <= 0:
        raise NotInSemigroupError(f"positive member required, got r={r}")
    prof = profile(ctx, r)
    if not prof.member:
        raise NotInSemigroupError(f"r={r} is not in the semigroup")
    if r >= ctx.la:
        raise NotInSemigroupError(
            f"r={r} is beyond the validated slice range (la={ctx.la})")
    return prof


def restriction_matrix(ctx, r, l_set):
    """P^L_I: the |L| x delta matrix of the slice map on coordinates L.

    Multiplying by the coordinates of g in the staircase basis yields the
    coefficients of the image of g on t^(r+kq), k in L.
    """
    prof = _slice_profile(ctx, r)
    l_set = tuple(sorted(set(l_set)))
    if not l_set:
        raise IndexOutOfRangeError("L must be non-empty")
    if l_set[0] < 0 or l_set[-1] > prof.phi[0]:
        raise IndexOutOfRangeError(f"L={l_set} escapes [0, {prof.phi[0]}]")
    return RestrictionMatrix(r=r, l_set=l_set,
                             matrix=rotated_matrix(prof.i_set, l_set))


def good_set(ctx, r):
    """All r-good indices in [0, phi_1], straight from the definition.

    k fails exactly when r + kq = u + jq for some member u = r + k'q with
    k' in [1, k] and j = k - k' <= phi_1(u); 0 is always good.
    """
    prof = _slice_profile(ctx, r)
    q = ctx.q
    good = [0]
    for k in range(1, prof.phi[0] + 1):
        reachable = False
        for kp in range(1, k + 1):
            up = profile(ctx, r + kp * q)
            if up.member and k - kp <= up.phi[0]:
                reachable = True
                break
        if not reachable:
            good.append(k)
    return GoodSet(r=r, elements=tuple(good))


def kernel_dim(ctx, r, l_set):
    """dim ker of the restriction to L: delta - min(|L|, delta).

    The formula is cross-checked against the actual rank of the matrix.
    """
    prof = _slice_profile(ctx, r)
    rmat = restriction_matrix(ctx, r, l_set)
    expected = prof.delta - min(len(rmat.l_set), prof.delta)
    actual = prof.delta - rank(rmat.matrix)
    if expected != actual:
        raise ArithmeticError(
            f"rank defect at r={r}, L={rmat.l_set}: formula {expected}, matrix {actual}")
    return expected


def kernel_poly(ctx, r, l_set):
    """The signed-minor kernel generator for |L| = delta - 1.

    Returns sum_j (-1)^j * det(B^(I minus its (j+1)-th largest row)_L) times
    the j-th staircase monomial; for delta = 1 and empty L this degenerates
    to the single basis monomial (empty determinants read as 1).
    """
    prof = _slice_profile(ctx, r)
    l_set = tuple(sorted(set(l_set)))
    if len(l_set) != prof.delta - 1:
        raise WrongCardinalityError(
            f"|L| must be delta-1 = {prof.delta - 1}, got {len(l_set)}")
    if l_set and (l_set[0] < 0 or l_set[-1] > prof.phi[0]):
        raise IndexOutOfRangeError(f"L={l_set} escapes [0, {prof.phi[0]}]")
    phi1 = prof.phi[0]
    coeffs = []
    for j in range(prof.kappa + 1):
        rows = tuple(i for i in prof.i_set if i != phi1 - j)
        coeffs.append((-1) ** j * bin_det(rows, l_set))
    return basis_combination(prof.phi, coeffs)


def _split_sets_dim2(ctx, r):
    # the even-n window point with pair (1, 0): its good kernel is the direct
    # sum of the kernels on two cardinality-(delta-1) supersets of G_r
    n = ctx.n
    l1 = (0,) + interval(2, (n - 2) // 2)
    l2 = interval(0, (n - 4) // 2)
    return l1, l2


def good_kernel_basis(ctx, r):
    """Basis of the good kernel at r (empty when the dimension is zero)."""
    prof = _slice_profile(ctx, r)
    gset = good_set(ctx, r)
    dim = prof.delta - min(len(gset.elements), prof.delta)
    if dim == 0:
        return []
    if len(gset.elements) == prof.delta - 1:
        return [kernel_poly(ctx, r, gset.elements)]
    n = ctx.n
    if (dim == 2 and n % 2 == 0 and r == ctx.s0 + n - 3
            and (prof.iota, prof.c) == (1, 0)):
        l1, l2 = _split_sets_dim2(ctx, r)
        first = kernel_poly(ctx, r, l1)
        # the signed-minor formula carries (-1)^((n-4)/2) here; normalize so
        # the mixed monomial x y^(n-3) z enters with coefficient +1
        if first.coeff((1, n - 3, 1)) < 0:
            first = -first
        return [first, kernel_poly(ctx, r, l2)]
    rmat = restriction_matrix(ctx, r, gset.elements)
    monos = wr_basis(ctx, r)
    return [Poly3(list(zip(monos, vec))) for vec in kernel_basis(rmat.matrix)]
