"""Sparse exact polynomials in x, y, z and in t, plus the weighted grading.

The weight of a monomial x^a1 y^a2 z^a3 is a1*a + a2*(a+1) + a3*(a+2); the
image of x under the curve map is t^a (1 + t^q) while y, z map to plain
powers of t, so every polynomial maps to a polynomial in t with the same
minimal order.
"""

from fractions import Fraction

from .binomials import binom
from .semigroup import NotInSemigroupError, factorizations, profile

OMEGA = (-1, 2, -1)


class ZeroPolynomialError(ValueError):
    """The zero polynomial has no order or leading form."""


class OutOfValidatedRangeError(ValueError):
    """The staircase basis of the weight slice is only guaranteed below la."""


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


def _term_sort_key(e):
    # canonical order: descending by total degree, then lexicographic x > y > z
    return (-(e[0] + e[1] + e[2]), -e[0], -e[1], -e[2])


def _coeff_str(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _monomial_str(e):
    parts = []
    for name, exp in zip("xyz", e):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


class Poly3:
    """Sparse polynomial in x, y, z over the exact rationals.

    Terms map exponent triples to nonzero coefficients; zero coefficients
    are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if len(e) != 3 or min(e) < 0:
                    raise ValueError(f"bad exponent triple {e}")
                c = _norm_coeff(data.get(e, 0) + c)
                if c:
                    data[tuple(e)] = c
                else:
                    data.pop(tuple(e), None)
        self.terms = data

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def monomial(cls, e, c=1):
        return cls([(tuple(e), c)])

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, e):
        return self.terms.get(tuple(e), 0)

    def items(self):
        """Terms in the canonical order."""
        return sorted(self.terms.items(), key=lambda item: _term_sort_key(item[0]))

    def __eq__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = _norm_coeff(out.get(e, 0) + c)
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        res = Poly3()
        res.terms = out
        return res

    def __neg__(self):
        res = Poly3()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, Poly3):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly3):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                    c = _norm_coeff(out.get(e, 0) + c1 * c2)
                    if c:
                        out[e] = c
                    else:
                        out.pop(e, None)
            res = Poly3()
            res.terms = out
            return res
        if isinstance(other, (int, Fraction)):
            if not other:
                return Poly3()
            res = Poly3()
            res.terms = {e: _norm_coeff(c * other) for e, c in self.terms.items()}
            return res
        return NotImplemented

    __rmul__ = __mul__

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly3({format_poly(self)!r})"


def format_poly(p, compact=False):
    """Signed-term text form, e.g. ``x^4*z - x^3*y^2 - 3*x*y*z^3``.

    With compact=True the separators carry no spaces (CAS script form).
    """
    if p.is_zero:
        return "0"
    plus, minus = ("+", "-") if compact else (" + ", " - ")
    chunks = []
    for e, c in p.items():
        negative = c < 0
        mag = -c if negative else c
        mono = _monomial_str(e)
        if not mono:
            body = _coeff_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_coeff_str(mag)}*{mono}"
        if not chunks:
            chunks.append(f"-{body}" if negative else body)
        else:
            chunks.append((minus if negative else plus) + body)
    return "".join(chunks)


def poly_to_json_terms(p):
    """Terms as [{"c": coefficient string, "e": [a1, a2, a3]}, ...]."""
    return [{"c": _coeff_str(c), "e": list(e)} for e, c in p.items()]


def poly_from_json_terms(entries):
    return Poly3([(tuple(item["e"]), Fraction(item["c"])) for item in entries])


class Poly1:
    """Sparse polynomial in t over the exact rationals."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                if e < 0:
                    raise ValueError(f"negative exponent {e}")
                c = _norm_coeff(data.get(e, 0) + c)
                if c:
                    data[e] = c
                else:
                    data.pop(e, None)
        self.terms = data

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def coeff(self, e):
        return self.terms.get(e, 0)

    def support(self):
        return sorted(self.terms)

    def order(self):
        if not self.terms:
            raise ZeroPolynomialError("zero polynomial has no order")
        return min(self.terms)

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            c = _norm_coeff(out.get(e, 0) + c)
            if c:
                out[e] = c
            else:
                out.pop(e, None)
        res = Poly1()
        res.terms = out
        return res

    def __neg__(self):
        res = Poly1()
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Poly1):
            out = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = e1 + e2
                    c = _norm_coeff(out.get(e, 0) + c1 * c2)
                    if c:
                        out[e] = c
                    else:
                        out.pop(e, None)
            res = Poly1()
            res.terms = out
            return res
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for e in self.support():
            c = self.terms[e]
            mono = "1" if e == 0 else ("t" if e == 1 else f"t^{e}")
            body = mono if abs(c) == 1 and e else (
                _coeff_str(abs(c)) if e == 0 else f"{_coeff_str(abs(c))}*{mono}")
            if not chunks:
                chunks.append(f"-{body}" if c < 0 else body)
            else:
                chunks.append((" - " if c < 0 else " + ") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"Poly1({str(self)!r})"


def weight(ctx, e):
    """The weighted order of the monomial with exponent triple e."""
    return e[0] * ctx.a + e[1] * (ctx.a + 1) + e[2] * (ctx.a + 2)


def rho_apply(ctx, p):
    """Image of p under x -> t^a (1+t^q), y -> t^(a+1), z -> t^(a+2).

    Each monomial of weight w and x-degree d contributes C(d, k) t^(w + k q)
    for k = 0..d.
    """
    q = ctx.q
    out = {}
    for e, c in p.terms.items():
        w = weight(ctx, e)
        d = e[0]
        for k in range(d + 1):
            exp = w + k * q
            val = _norm_coeff(out.get(exp, 0) + c * binom(d, k))
            if val:
                out[exp] = val
            else:
                out.pop(exp, None)
    res = Poly1()
    res.terms = out
    return res


def sigma_order(ctx, p):
    """Minimal weight over the support of p."""
    if p.is_zero:
        raise ZeroPolynomialError("zero polynomial has no weighted order")
    return min(weight(ctx, e) for e in p.terms)


def sigma_split(ctx, p):
    """(leading, tail): terms of minimal weight and everything else."""
    r = sigma_order(ctx, p)
    lead, tail = Poly3(), Poly3()
    for e, c in p.terms.items():
        (lead if weight(ctx, e) == r else tail).terms[e] = c
    return lead, tail


def wr_basis(ctx, r):
    """Ordered monomial basis phi, phi+omega, ..., phi+kappa*omega of W_r.

    Valid for members 0 < r < la; outside that range the slice is either
    trivial or not staircase-shaped.
    """
    if r <= 0:
        raise NotInSemigroupError(f"positive member required, got r={r}")
    prof = profile(ctx, r)
    if not prof.member:
        raise NotInSemigroupError(f"r={r} is not in the semigroup")
    if r >= ctx.la:
        raise OutOfValidatedRangeError(
            f"r={r} is beyond the validated range (la={ctx.la})")
    phi1, phi2, phi3 = prof.phi
    return [(phi1 - j, phi2 + 2 * j, phi3 - j) for j in range(prof.kappa + 1)]


def basis_combination(phi, coeffs, start_j=0):
    """Sum of coeffs[j] * m^(phi + (start_j+j) * omega)."""
    terms = []
    for idx, c in enumerate(coeffs):
        j = start_j + idx
        e = (phi[0] - j, phi[1] + 2 * j, phi[2] - j)
        if min(e) < 0:
            raise ValueError(f"offset {j} leaves the non-negative octant at {e}")
        terms.append((e, c))
    return Poly3(terms)
