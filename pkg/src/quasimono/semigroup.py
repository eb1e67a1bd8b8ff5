"""Arithmetic of the numerical semigroup <a, a+1, a+2> with a = (n-1)n/2.

Every quantity the rest of the pipeline consumes about a single element r
(quotient/remainder by a, the canonical factorization, the derived indices
and index intervals) lives in ElementProfile.
"""

from dataclasses import dataclass

from .binomials import interval


class NotInSemigroupError(ValueError):
    """The element does not belong to the semigroup."""


@dataclass(frozen=True)
class SemigroupContext:
    """Global constants of one problem instance."""

    n: int
    a: int
    q: int
    s0: int
    frobenius: int
    la: int

    @property
    def weights(self):
        """The exponent weights of x, y, z."""
        return (self.a, self.a + 1, self.a + 2)


def build_context(n):
    """Constants for the curve with exponents a, a+1, a+2 where a=(n-1)n/2.

    q is n for odd n and n-1 for even n; s0 = a(n-1)+2 is where generator
    leading orders start; la bounds the range where weight slices have the
    staircase basis.
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    a = (n - 1) * n // 2
    q = 2 * ((n + 1) // 2) - 1
    s0 = a * (n - 1) + 2
    frobenius = (a // 2) * a - 1
    la = (a // 2) * (a + 2) if a % 2 == 0 else (a // 2 + 2) * a
    return SemigroupContext(n=n, a=a, q=q, s0=s0, frobenius=frobenius, la=la)


@dataclass(frozen=True)
class ElementProfile:
    """Stratification data of a single element r.

    phi is the canonical exponent triple; for members below la the basis of
    the weight-r slice is phi, phi+omega, ..., phi+kappa*omega and delta is
    its dimension.  All fields are computed by the closed formulas for every
    r >= 0; the slice-basis reading of delta requires r < la.
    """

    r: int
    member: bool
    ell: int
    eps: int
    phi: tuple
    kappa: int
    iota: int
    c: int
    delta: int
    i_set: tuple
    h_set: tuple


def profile(ctx, r):
    """Per-element data for any r >= 0 (non-members still get formula fields)."""
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    ell, eps = divmod(r, ctx.a)
    member = eps <= 2 * ell
    phi1 = ell - (eps + 1) // 2
    phi2 = eps % 2
    phi3 = eps // 2
    kappa = min(phi1, phi3)
    iota = phi2 + abs(phi1 - phi3)
    return ElementProfile(
        r=r,
        member=member,
        ell=ell,
        eps=eps,
        phi=(phi1, phi2, phi3),
        kappa=kappa,
        iota=iota,
        c=phi3 - phi1,
        delta=kappa + 1,
        i_set=interval(phi1 - kappa, phi1),
        h_set=interval(0, phi1),
    )


def is_member(ctx, r):
    return r >= 0 and (r % ctx.a) <= 2 * (r // ctx.a)


def factorizations(ctx, r):
    """All exponent triples (a1, a2, a3) with a1*a + a2*(a+1) + a3*(a+2) = r.

    Exhaustive bounded scan; empty exactly when r is not in the semigroup.
    """
    if r < 0:
        raise ValueError(f"r must be non-negative, got {r}")
    a = ctx.a
    out = []
    for a1 in range(r // a + 1):
        rest1 = r - a1 * a
        for a2 in range(rest1 // (a + 1) + 1):
            rest2 = rest1 - a2 * (a + 1)
            a3, rem = divmod(rest2, a + 2)
            if rem == 0:
                out.append((a1, a2, a3))
    return out


def classify_window(ctx):
    """(k, r_k, iota, c) for the window points r_k = s0+k-1, k = 1..n."""
    out = []
    for k in range(1, ctx.n + 1):
        r_k = ctx.s0 + k - 1
        prof = profile(ctx, r_k)
        out.append((k, r_k, prof.iota, prof.c))
    return out
