"""Construction of the n generators of the kernel of the curve map.

Each generator is a leading form (an explicit signed-binomial-determinant
combination on one weight slice) plus a tail assembled by a cascade of
uniquely solvable linear systems: every stage adds an element of a higher
slice, chosen to cancel prescribed coefficients of the accumulated image in
t, and the cascade is guaranteed to terminate with image exactly zero.

Indexing quirk for even n: the generators of index n-2 and n-1 share the
window point s0+n-3 (a two-dimensional good kernel), the generator of index
n sits at s0+n-2, and the window point s0+n-1 contributes nothing.  The
mapping lives in a single table here (_window_case).
"""

from dataclasses import dataclass
from enum import Enum

from .binomials import bin_det, binom, interval
from .linalg import Matrix, SingularMatrixError, solve_unique
from .polynomials import Poly3, basis_combination, rho_apply, sigma_order
from .semigroup import profile


class SingularSystemError(ArithmeticError):
    """A tail system was singular or the cascade left a residual: a bug."""


class CaseKind(Enum):
    NEG_I = "c=-iota"
    NEG_I_PLUS_1 = "c=-iota+1"
    ZERO_ZERO = "(0,0)"
    TWO_ONE = "(2,1)"
    TWO_TWO = "(2,2)"
    ONE_NEG1 = "(1,-1)"
    ONE_ZERO = "(1,0)"
    ONE_ONE = "(1,1)"
    THREE_TWO = "(3,2)"


@dataclass(frozen=True)
class CaseTag:
    kind: CaseKind
    k: int


@dataclass(frozen=True)
class TailStage:
    """One solved system: the slice s, its phi, and the solved coefficients."""

    stage_no: int
    s: int
    phi: tuple
    lambdas: dict


@dataclass(frozen=True)
class GeneratorRecord:
    k: int
    f: Poly3
    g: Poly3
    sigma_order: int


@dataclass(frozen=True)
class GeneratorSet:
    n: int
    generators: tuple


def kind_for_pair(iota, c):
    """Case kind of a window point from its (iota, c) pair."""
    if c == -iota and iota >= 2:
        return CaseKind.NEG_I
    if c == -iota + 1 and iota >= 2:
        return CaseKind.NEG_I_PLUS_1
    return {
        (0, 0): CaseKind.ZERO_ZERO,
        (2, 1): CaseKind.TWO_ONE,
        (2, 2): CaseKind.TWO_TWO,
        (1, -1): CaseKind.ONE_NEG1,
        (1, 0): CaseKind.ONE_ZERO,
        (1, 1): CaseKind.ONE_ONE,
        (3, 2): CaseKind.THREE_TWO,
    }[(iota, c)]


def _check_k(ctx, k):
    if not 1 <= k <= ctx.n:
        raise ValueError(f"generator index must be in 1..{ctx.n}, got {k}")
    if ctx.n < 6:
        raise ValueError("general construction needs n >= 6; use build_small")


def _window_case(ctx, k):
    """(CaseTag, window point) for generator k; the one even-n mapping table."""
    n, s0 = ctx.n, ctx.s0
    if n % 2 == 1:
        if k <= n - 3:
            kind = CaseKind.NEG_I if k % 2 == 1 else CaseKind.NEG_I_PLUS_1
        elif k == n - 2:
            kind = CaseKind.ZERO_ZERO
        elif k == n - 1:
            kind = CaseKind.TWO_ONE
        else:
            kind = CaseKind.TWO_TWO
        return CaseTag(kind, k), s0 + k - 1
    if k <= n - 4:
        kind = CaseKind.NEG_I if k % 2 == 1 else CaseKind.NEG_I_PLUS_1
        return CaseTag(kind, k), s0 + k - 1
    if k == n - 3:
        return CaseTag(CaseKind.ONE_NEG1, k), s0 + k - 1
    if k in (n - 2, n - 1):
        return CaseTag(CaseKind.ONE_ZERO, k), s0 + n - 3
    return CaseTag(CaseKind.ONE_ONE, k), s0 + n - 2


def expected_sigma_orders(ctx):
    """Leading orders of the n generators, in index order."""
    n, s0 = ctx.n, ctx.s0
    if n % 2 == 1:
        return [s0 + k - 1 for k in range(1, n + 1)]
    if n == 4:
        # the fourth generator lives one slot past the window
        return [s0, s0 + 1, s0 + 2, s0 + 4]
    return [s0 + k - 1 for k in range(1, n - 1)] + [s0 + n - 3, s0 + n - 2]


def _signed_bindet_form(phi, jmax, rows, cols):
    """sum_j (-1)^j det(B^(rows minus phi_1 - j)_cols) m^(phi + j omega)."""
    phi1 = phi[0]
    coeffs = []
    for j in range(jmax + 1):
        kept = tuple(i for i in rows if i != phi1 - j)
        coeffs.append((-1) ** j * bin_det(kept, cols))
    return basis_combination(phi, coeffs)


def _signed_binom_form(phi, jmax, top):
    """sum_j (-1)^j C(top, phi_1 - j) m^(phi + j omega)."""
    coeffs = [(-1) ** j * binom(top, phi[0] - j) for j in range(jmax + 1)]
    return basis_combination(phi, coeffs)


def build_leading(ctx, k):
    """Leading form of generator k (n >= 6), by the closed formulas."""
    _check_k(ctx, k)
    n = ctx.n
    if n % 2 == 1:
        if k <= n - 3 and k % 2 == 1:
            rows = interval(n - k - 2, (2 * n - k - 3) // 2)
            cols = (0,) + interval((n - k) // 2, (n - 3) // 2)
            return _signed_bindet_form(
                ((2 * n - k - 3) // 2, 0, (k + 1) // 2), (k + 1) // 2, rows, cols)
        if k <= n - 3 and k % 2 == 0:
            rows = interval(n - k - 2, (2 * n - k - 4) // 2)
            cols = (0,) + interval((n - k + 1) // 2, (n - 3) // 2)
            return _signed_bindet_form(
                ((2 * n - k - 4) // 2, 1, k // 2), k // 2, rows, cols)
        if k == n - 2:
            return _signed_binom_form(
                ((n - 1) // 2, 0, (n - 1) // 2), (n - 1) // 2, (n - 1) // 2)
        if k == n - 1:
            return _signed_binom_form(
                ((n - 3) // 2, 1, (n - 1) // 2), (n - 3) // 2, (n - 3) // 2)
        return _signed_binom_form(
            ((n - 3) // 2, 0, (n + 1) // 2), (n - 3) // 2, (n - 3) // 2)
    if k <= n - 4 and k % 2 == 1:
        rows = interval(n - k - 2, (2 * n - k - 3) // 2)
        cols = (0,) + interval((n - k + 1) // 2, (n - 2) // 2)
        return _signed_bindet_form(
            ((2 * n - k - 3) // 2, 0, (k + 1) // 2), (k + 1) // 2, rows, cols)
    if k <= n - 4 and k % 2 == 0:
        rows = interval(n - k - 2, (2 * n - k - 4) // 2)
        cols = (0,) + interval((n - k + 2) // 2, (n - 2) // 2)
        return _signed_bindet_form(
            ((2 * n - k - 4) // 2, 1, k // 2), k // 2, rows, cols)
    if k == n - 3:
        rows = interval(1, n // 2)
        cols = (0,) + interval(2, (n - 2) // 2)
        return _signed_bindet_form(
            (n // 2, 0, (n - 2) // 2), (n - 2) // 2, rows, cols)
    if k == n - 2:
        return Poly3([((1, n - 3, 1), 1), ((0, n - 1, 0), -1)])
    if k == n - 1:
        return _signed_binom_form(
            ((n - 2) // 2, 1, (n - 2) // 2), (n - 2) // 2, (n - 2) // 2)
    return _signed_binom_form(
        ((n - 2) // 2, 0, n // 2), (n - 2) // 2, (n - 2) // 2)


def _stage_plan(ctx, k):
    """The cascade for generator k: a list of (slice, offsets, targets).

    Offsets are the staircase indices j allowed in the new piece, targets the
    shifts kk whose coefficient at t^(s + kk*q) the piece must cancel; both
    are equally sized, and empty stages (the vacuous-interval convention)
    contribute nothing.
    """
    n, q = ctx.n, ctx.q
    tag, r = _window_case(ctx, k)
    half = n // 2
    if tag.kind is CaseKind.NEG_I:
        i = n - k - 2
        s1, s2 = r + q, r + half * q
        s3, s4 = s2 + q, s2 + q + half * q
        return r, tag, [
            (s1, interval(0, (i - 1) // 2), interval(0, (i - 1) // 2)),
            (s2, interval(1, (n - 1 - i) // 2), (0,) + interval((i + 5) // 2, half)),
            (s3, interval(0, (i + 1) // 2), interval(0, (i + 1) // 2)),
            (s4, interval((i + 3) // 2 - (i - 2) // 2, (i + 3) // 2),
             interval(0, (i - 2) // 2)),
        ]
    if tag.kind is CaseKind.NEG_I_PLUS_1:
        i = n - k - 1
        s1, s2 = r + q, r + half * q
        s3, s4 = s2 + q, s2 + q + half * q
        return r, tag, [
            (s1, interval(0, (i - 1) // 2), interval(0, (i - 1) // 2)),
            (s2, interval(1, (n - 1 - i) // 2), (0,) + interval((i + 5) // 2, half)),
            (s3, interval(0, (i + 1) // 2), interval(0, (i + 1) // 2)),
            (s4, interval((i + 3) // 2 - (i - 4) // 2, (i + 3) // 2),
             interval(0, (i - 4) // 2)),
        ]
    if tag.kind is CaseKind.ZERO_ZERO:
        s1 = r + ((n - 1) // 2) * q
        return r, tag, [
            (s1, ((n - 1) // 2,), (0,)),
            (s1 + q, (0,), (0,)),
        ]
    if tag.kind is CaseKind.TWO_ONE:
        s1 = r + ((n - 3) // 2) * q
        s3 = s1 + ((n + 1) // 2) * q
        return r, tag, [
            (s1, (0,), (0,)),
            (s1 + q, interval(1, (n - 1) // 2), interval(0, (n - 3) // 2)),
            (s3, interval(1, (n - 1) // 2), (0,) + interval(2, (n - 1) // 2)),
            (s3 + q, (1,), (0,)),
        ]
    if tag.kind is CaseKind.TWO_TWO:
        s1 = r + ((n - 3) // 2) * q
        return r, tag, [
            (s1, (0,), (0,)),
            (s1 + q, interval(1, (n - 1) // 2), interval(0, (n - 3) // 2)),
            (s1 + ((n + 1) // 2) * q, interval(2, (n + 1) // 2),
             interval(0, (n - 3) // 2)),
        ]
    if tag.kind is CaseKind.ONE_NEG1:
        s2 = r + half * q
        return r, tag, [
            (r + q, (0,), (0,)),
            (s2, ((n - 2) // 2,), (0,)),
            (s2 + q, (0, 1), (0, 1)),
        ]
    if tag.kind is CaseKind.ONE_ZERO:
        if k == n - 2:
            return r, tag, [(r + q, (0,), (0,))]
        s2 = r + ((n - 2) // 2) * q
        s4 = s2 + ((n + 2) // 2) * q
        return r, tag, [
            (s2, (0,), (0,)),
            (s2 + q, interval(0, (n - 2) // 2), interval(0, (n - 2) // 2)),
            (s4, interval(2, (n - 2) // 2), (0,) + interval(3, (n - 2) // 2)),
            (s4 + q, (1, 2), (0, 1)),
        ]
    # (1,1): the last even-n generator
    s1 = r + ((n - 2) // 2) * q
    s3 = s1 + ((n + 2) // 2) * q
    return r, tag, [
        (s1, (0,), (0,)),
        (s1 + q, interval(1, half), interval(0, (n - 2) // 2)),
        (s3, interval(3, half), (0,) + interval(2, (n - 4) // 2)),
        (s3 + q, (1,), (0,)),
    ]


def _build_with_trace(ctx, k):
    """(f, g, stages) for generator k, n >= 6."""
    _check_k(ctx, k)
    g = build_leading(ctx, k)
    _, tag, plan = _stage_plan(ctx, k)
    residual = rho_apply(ctx, g)
    tail = Poly3()
    stages = []
    stage_no = 2 if (tag.kind is CaseKind.ONE_ZERO and k == ctx.n - 1) else 1
    for s, offsets, targets in plan:
        if not offsets and not targets:
            stage_no += 1
            continue
        if len(offsets) != len(targets):
            raise SingularSystemError(
                f"stage at slice {s} is not square: {offsets} vs {targets}")
        prof = profile(ctx, s)
        if not prof.member or not (0 < s < ctx.la):
            raise SingularSystemError(f"stage slice {s} escapes the valid range")
        phi1 = prof.phi[0]
        mat = Matrix([[binom(phi1 - j, kk) for j in offsets] for kk in targets])
        rhs = [-residual.coeff(s + kk * ctx.q) for kk in targets]
        try:
            lam = solve_unique(mat, rhs)
        except SingularMatrixError as exc:
            raise SingularSystemError(
                f"singular tail system at slice {s} for k={k}") from exc
        piece = basis_combination(prof.phi, lam, start_j=offsets[0])
        tail = tail + piece
        residual = residual + rho_apply(ctx, piece)
        stages.append(TailStage(stage_no, s, prof.phi, dict(zip(offsets, lam))))
        stage_no += 1
    if not residual.is_zero:
        raise SingularSystemError(f"cascade left a nonzero image for k={k}")
    return g + tail, g, stages


def build_tail(ctx, k):
    """The tail h with g + h in the kernel, n >= 6."""
    f, g, _ = _build_with_trace(ctx, k)
    return f - g


def tail_stages(ctx, k):
    """The solved stages (slice, coefficients) of the tail of generator k."""
    _, _, stages = _build_with_trace(ctx, k)
    return stages


def _poly(term_list):
    return Poly3([(e, c) for c, e in term_list])


def build_small(ctx):
    """The hard-coded generator tables for n = 3, 4, 5."""
    n = ctx.n
    if n == 3:
        table = [
            ([(1, (1, 0, 1)), (-1, (0, 2, 0))],
             [(-1, (1, 2, 0)), (1, (0, 1, 2))]),
            ([(1, (3, 0, 0)), (-1, (0, 1, 1))],
             [(-3, (1, 1, 1)), (1, (0, 0, 3)), (-1, (2, 1, 1)), (1, (1, 0, 3))]),
            ([(1, (2, 1, 0)), (-1, (0, 0, 2))],
             [(-1, (0, 2, 1)), (-1, (1, 0, 2))]),
        ]
    elif n == 4:
        table = [
            ([(1, (1, 2, 0)), (-1, (2, 0, 1))],
             [(1, (0, 1, 2)), (1, (2, 2, 0)), (-2, (1, 1, 2)), (1, (0, 0, 4))]),
            ([(1, (1, 1, 1)), (-1, (0, 3, 0))],
             [(-1, (0, 0, 3))]),
            ([(1, (1, 0, 2)), (-1, (0, 2, 1))],
             [(-1, (3, 1, 0)), (1, (2, 0, 2)), (1, (1, 2, 1)), (1, (0, 4, 0))]),
            ([(1, (4, 0, 0)), (-1, (0, 0, 3))],
             [(-4, (2, 1, 1)), (2, (0, 2, 2)), (-1, (1, 2, 2)), (1, (0, 1, 4))]),
        ]
    elif n == 5:
        table = [
            ([(1, (3, 0, 1)), (-1, (2, 2, 0))],
             [(-1, (0, 1, 3)), (-2, (3, 2, 0)), (6, (1, 1, 3)), (-1, (0, 3, 2)),
              (2, (0, 5, 1))]),
            ([(1, (2, 1, 1)), (-1, (1, 3, 0))],
             [(-1, (0, 0, 4)), (-1, (2, 3, 0)), (1, (1, 0, 4)), (1, (0, 2, 3))]),
            ([(1, (2, 0, 2)), (-2, (1, 2, 1)), (1, (0, 4, 0))],
             [(-1, (1, 4, 0)), (1, (0, 1, 4))]),
            ([(1, (1, 1, 2)), (-1, (0, 3, 1))],
             [(-1, (5, 0, 0)), (10, (1, 3, 1)), (-5, (0, 5, 0)), (1, (2, 3, 1)),
              (9, (1, 5, 0)), (-6, (0, 2, 4))]),
            ([(1, (1, 0, 3)), (-1, (0, 2, 2))],
             [(-1, (4, 1, 0)), (6, (1, 2, 2)), (-2, (0, 4, 1)), (1, (1, 4, 1)),
              (3, (0, 6, 0))]),
        ]
    else:
        raise ValueError(f"build_small serves n in 3..5, got n={n}")
    records = []
    for k, (g_terms, tail_terms) in enumerate(table, start=1):
        g = _poly(g_terms)
        f = g + _poly(tail_terms)
        records.append(GeneratorRecord(k=k, f=f, g=g,
                                       sigma_order=sigma_order(ctx, f)))
    return GeneratorSet(n=n, generators=tuple(records))


def build_all(ctx):
    """All n generators with their leading forms and leading orders."""
    if ctx.n <= 5:
        return build_small(ctx)
    records = []
    for k in range(1, ctx.n + 1):
        f, g, _ = _build_with_trace(ctx, k)
        records.append(GeneratorRecord(k=k, f=f, g=g,
                                       sigma_order=sigma_order(ctx, f)))
    return GeneratorSet(n=ctx.n, generators=tuple(records))
