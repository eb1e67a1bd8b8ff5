"""Independent checks of everything the construction claims.

The checks deliberately take different routes than the construction: kernel
membership re-expands images from scratch, the colength check reduces modulo
z to a plain monomial staircase, and the bounded kernel search enumerates
an exact linear system over all candidate monomials with no knowledge of
the closed formulas.
"""

from dataclasses import dataclass
from fractions import Fraction

from .binomials import binom
from .generators import build_all, expected_sigma_orders
from .linalg import Matrix, kernel_basis, rank
from .polynomials import Poly3, rho_apply, sigma_split, weight
from .restrictions import good_kernel_basis, good_set, kernel_dim
from .semigroup import NotInSemigroupError, factorizations, profile


class BoundTooSmallError(ValueError):
    """The search bound does not reach the requested order."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    n: int
    checks: tuple

    @property
    def overall(self):
        return all(c.passed for c in self.checks)


def verify_kernel(ctx, gs):
    """Every generator must map to the zero polynomial in t."""
    bad = []
    for rec in gs.generators:
        image = rho_apply(ctx, rec.f)
        if not image.is_zero:
            bad.append(f"k={rec.k} residual exponents {image.support()[:4]}")
    if bad:
        return CheckResult("kernel_membership", False, "; ".join(bad))
    return CheckResult("kernel_membership", True,
                       f"all {len(gs.generators)} generators map to 0")


def _coordinates(p, monomials):
    index = {e: i for i, e in enumerate(monomials)}
    row = [0] * len(monomials)
    for e, c in p.terms.items():
        if e not in index:
            return None
        row[index[e]] = c
    return row


def verify_sigma_structure(ctx, gs):
    """Leading forms, the order layout, and their linear independence."""
    problems = []
    orders = []
    for rec in gs.generators:
        lead, _ = sigma_split(ctx, rec.f)
        if lead != rec.g:
            problems.append(f"k={rec.k}: leading form mismatch")
        orders.append(rec.sigma_order)
    expected = expected_sigma_orders(ctx)
    if orders != expected:
        problems.append(f"order layout {orders} != expected {expected}")
    by_order = {}
    for rec in gs.generators:
        by_order.setdefault(rec.sigma_order, []).append(rec.g)
    for r, leads in sorted(by_order.items()):
        monos = factorizations(ctx, r)
        rows = [_coordinates(g, monos) for g in leads]
        if any(row is None for row in rows):
            problems.append(f"r={r}: a leading form escapes the weight slice")
            continue
        if rank(Matrix(rows, cols=len(monos))) != len(leads):
            problems.append(f"r={r}: leading forms are dependent")
    if ctx.n >= 6:
        for r, leads in sorted(by_order.items()):
            basis = good_kernel_basis(ctx, r)
            if basis != leads:
                problems.append(f"r={r}: leading forms differ from the good kernel basis")
    if problems:
        return CheckResult("sigma_structure", False, "; ".join(problems))
    return CheckResult("sigma_structure", True,
                       f"layout {expected[0]}..{expected[-1]} with "
                       f"{len(set(expected))} distinct orders")


def verify_window_dimensions(ctx):
    """Good-kernel dimensions across the window: all 1 except the two even-n spots."""
    n = ctx.n
    if n < 6:
        raise ValueError("window dimension check applies to n >= 6")
    problems = []
    for k in range(1, n + 1):
        r = ctx.s0 + k - 1
        prof = profile(ctx, r)
        if n % 2 == 0 and (prof.iota, prof.c) == (1, 0):
            want = 2
        elif n % 2 == 0 and (prof.iota, prof.c) == (3, 2):
            want = 0
        else:
            want = 1
        got = kernel_dim(ctx, r, good_set(ctx, r).elements)
        if got != want:
            problems.append(f"r={r}: dim {got} != {want}")
    if problems:
        return CheckResult("window_kernel_dimensions", False, "; ".join(problems))
    return CheckResult("window_kernel_dimensions", True,
                       f"dimensions match at all {n} window points")


def verify_below_s0(ctx):
    """Good kernels vanish at every member strictly below s0."""
    bad = []
    total = 0
    for r in range(1, ctx.s0):
        if (r % ctx.a) > 2 * (r // ctx.a):
            continue
        total += 1
        if kernel_dim(ctx, r, good_set(ctx, r).elements) != 0:
            bad.append(r)
    if bad:
        return CheckResult("below_s0_vanishing", False,
                           f"nonzero good kernels at {bad[:8]}")
    return CheckResult("below_s0_vanishing", True,
                       f"zero at all {total} members below s0={ctx.s0}")


def _mod_z(p):
    return {(e[0], e[1]): c for e, c in p.terms.items() if e[2] == 0}


def _extract_monomial(bivariate):
    """GCD monomial and whether the cofactor is a unit (nonzero constant)."""
    mi = min(i for i, _ in bivariate)
    mj = min(j for _, j in bivariate)
    return (mi, mj), (mi, mj) in bivariate


def expected_mod_z_monomials(n):
    """x^n, x^(n-1) y, x^(n-3) y^2, ..., x y^(n-2), y^(n-1) as exponent pairs."""
    out = {(n, 0), (n - 1, 1), (0, n - 1)}
    for k in range(1, n - 2):
        out.add((n - k - 2, k + 1))
    return out


def staircase_count(monomials):
    """Lattice points under the staircase of the bivariate monomial ideal."""
    if not any(i == 0 for i, _ in monomials):
        raise ValueError("ideal has infinite colength in y")
    count = 0
    j = 0
    while True:
        row = [i for i, jg in monomials if jg <= j]
        if not row:
            raise ValueError("ideal has infinite colength in x")
        m = min(row)
        if m == 0:
            return count
        count += m
        j += 1


def mod_z_monomials(ctx, gs):
    """The monomial generators of the ideal modulo z, one per generator.

    The index-(n-2) generator reduces directly to a unit times y^(n-1); the
    remaining ones become monomial-times-unit only after discarding terms
    already inside (y^(n-1)), mirroring the order of the length computation.
    """
    n = ctx.n
    records = {rec.k: rec for rec in gs.generators}
    anchor = _mod_z(records[n - 2].f)
    if not anchor:
        raise ArithmeticError("generator n-2 vanishes modulo z")
    mono, unit = _extract_monomial(anchor)
    if mono != (0, n - 1) or not unit:
        raise ArithmeticError(f"generator n-2 reduces to {mono}, not y^{n - 1}")
    monomials = {(0, n - 1)}
    for k, rec in sorted(records.items()):
        if k == n - 2:
            continue
        reduced = {e: c for e, c in _mod_z(rec.f).items() if e[1] < n - 1}
        if not reduced:
            raise ArithmeticError(f"generator {k} vanishes modulo (z, y^{n - 1})")
        mono, unit = _extract_monomial(reduced)
        if not unit:
            raise ArithmeticError(
                f"generator {k} is not monomial-times-unit modulo (z, y^{n - 1})")
        monomials.add(mono)
    return monomials


def verify_colength(ctx, gs):
    """The mod-z monomial ideal and its staircase count a + 2."""
    try:
        monomials = mod_z_monomials(ctx, gs)
    except ArithmeticError as exc:
        return CheckResult("colength", False, str(exc))
    problems = []
    expected = expected_mod_z_monomials(ctx.n)
    if monomials != expected:
        problems.append(f"monomials {sorted(monomials)} != {sorted(expected)}")
    count = staircase_count(monomials)
    if count != ctx.a + 2:
        problems.append(f"colength {count} != a+2 = {ctx.a + 2}")
    if problems:
        return CheckResult("colength", False, "; ".join(problems))
    listing = ",".join(
        "".join(filter(None, [f"x^{i}" if i > 1 else "x" * min(i, 1),
                              f"y^{j}" if j > 1 else "y" * min(j, 1)]))
        for i, j in sorted(monomials, key=lambda m: (-m[0], m[1])))
    return CheckResult("colength", True,
                       f"ideal mod z = ({listing},z); colength {count} = a+2")


def brute_kernel_search(ctx, r, order_bound):
    """Exact bounded search for kernel elements with leading order r.

    Unknowns are coefficients on every monomial of weight in [r, order_bound];
    the full image in t must vanish.  Monomials whose weight is not congruent
    to r modulo q can never cancel against the class of r, so the system
    splits and only the class of r is assembled.  Returns kernel elements
    whose leading forms are linearly independent and span the projection of
    the kernel onto the weight-r slice.
    """
    prof = profile(ctx, r)
    if r <= 0 or not prof.member:
        raise NotInSemigroupError(f"r={r} is not a positive member")
    if order_bound < r:
        raise BoundTooSmallError(f"bound {order_bound} below r={r}")
    q = ctx.q
    columns = []
    for s in range(r, order_bound + 1, q):
        for alpha in factorizations(ctx, s):
            columns.append(alpha)
    row_index = {}
    rows_of = []
    for alpha in columns:
        w = weight(ctx, alpha)
        hits = []
        for k in range(alpha[0] + 1):
            e = w + k * q
            hits.append((row_index.setdefault(e, len(row_index)), binom(alpha[0], k)))
        rows_of.append(hits)
    data = [[0] * len(columns) for _ in range(len(row_index))]
    for col, hits in enumerate(rows_of):
        for ri, c in hits:
            data[ri][col] = c
    vectors = kernel_basis(Matrix(data, cols=len(columns)))
    lead_cols = [i for i, alpha in enumerate(columns) if weight(ctx, alpha) == r]
    kept = []
    for vec in vectors:
        block = [Fraction(vec[i]) for i in lead_cols]
        full = list(vec)
        for pivot, pblock, pfull in kept:
            c = block[pivot]
            if c:
                f = c / pblock[pivot]
                block = [b - f * pb for b, pb in zip(block, pblock)]
                full = [v - f * pv for v, pv in zip(full, pfull)]
        pivot = next((i for i, b in enumerate(block) if b), None)
        if pivot is not None:
            kept.append((pivot, block, full))
    return [Poly3([(alpha, c) for alpha, c in zip(columns, full) if c])
            for _, _, full in kept]


def _span_equal(ctx, r, polys_a, polys_b):
    monos = factorizations(ctx, r)
    rows_a = [_coordinates(p, monos) for p in polys_a]
    rows_b = [_coordinates(p, monos) for p in polys_b]
    if any(row is None for row in rows_a + rows_b):
        return False
    ra = rank(Matrix(rows_a, cols=len(monos)))
    rb = rank(Matrix(rows_b, cols=len(monos)))
    rboth = rank(Matrix(rows_a + rows_b, cols=len(monos)))
    return ra == rb == rboth and ra == len(polys_a) == len(polys_b)


def default_search_bound(ctx, gs):
    """la - 1, stretched to the deepest generator term when tails escape it."""
    deepest = max(weight(ctx, e) for rec in gs.generators for e in rec.f.terms)
    return max(ctx.la - 1, deepest)


def verify_leading_spans(ctx, gs, order_bound=None):
    """Search-discovered leading spans match the constructed ones windowwide."""
    if order_bound is None:
        order_bound = default_search_bound(ctx, gs)
    by_order = {}
    for rec in gs.generators:
        by_order.setdefault(rec.sigma_order, []).append(rec)
    problems = []
    points = 0
    for r in range(ctx.s0, ctx.s0 + ctx.n):
        if (r % ctx.a) > 2 * (r // ctx.a):
            continue
        points += 1
        found = brute_kernel_search(ctx, r, max(r, order_bound))
        expected = [rec.g for rec in by_order.get(r, [])]
        got = [sigma_split(ctx, p)[0] for p in found]
        if not expected and not got:
            continue
        if not _span_equal(ctx, r, expected, got):
            problems.append(f"r={r}: search span ({len(got)}) != built span "
                            f"({len(expected)})")
    if problems:
        return CheckResult("bounded_leading_spans", False, "; ".join(problems))
    return CheckResult("bounded_leading_spans", True,
                       f"spans agree at {points} window points "
                       f"(bound {order_bound})")


def full_report(ctx, search_max_n=8, search_bound=None):
    """Build everything, run every check, aggregate pass/fail.

    The bounded kernel search is only run up to search_max_n (the exact
    system grows quickly); beyond that the remaining checks still cover
    membership, structure, dimensions, and colength.
    """
    gs = build_all(ctx)
    checks = [verify_kernel(ctx, gs), verify_sigma_structure(ctx, gs)]
    if ctx.n >= 6:
        checks.append(verify_window_dimensions(ctx))
    checks.append(verify_below_s0(ctx))
    checks.append(verify_colength(ctx, gs))
    if ctx.n <= search_max_n:
        checks.append(verify_leading_spans(ctx, gs, search_bound))
    return VerificationReport(n=ctx.n, checks=tuple(checks))
