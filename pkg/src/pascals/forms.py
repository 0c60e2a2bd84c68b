"""Binary forms in Cayley notation, with the transvectant as the workhorse.

A form of degree n is stored by its Cayley coefficients (z_0, ..., z_n),
meaning the homogeneous polynomial

    sum_i  z_i * C(n, i) * x1^(n-i) * x2^i.

Coefficients may be Fractions or MultiPoly values; all arithmetic is exact
either way.  The binomial weights are what make the classical formulas
come out with small constants: in particular the r-th transvectant of
forms of degrees m, n reduces, for Cayley coefficients, to

    (G, H)_r = sum_{i=0}^{r} (-1)^i C(r, i) * G[i:] * H[r-i:]

where G[i:] denotes the degree-(m-r) form on the coefficient window
starting at i (the factorial prefactors of the derivative definition
cancel exactly against the binomials absorbed by the notation).
"""

from fractions import Fraction
from math import comb
from numbers import Rational

from .errors import BothZero, EmptyCoefficients, NotDivisible, OrderOutOfRange
from .multipoly import MultiPoly


def _promote(c):
    if isinstance(c, MultiPoly):
        return c
    if isinstance(c, Rational):
        return Fraction(c)
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


def _is_zero(c):
    return c.is_zero() if isinstance(c, MultiPoly) else c == 0


class BinaryForm:
    """A homogeneous binary form of fixed degree in Cayley notation.

    The declared degree is part of the identity of the form: the zero
    form of degree 2 and the zero form of degree 4 are different values,
    which keeps degree bookkeeping meaningful downstream.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(_promote(c) for c in coeffs)
        if not coeffs:
            raise EmptyCoefficients("a form needs at least one Cayley coefficient")
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("BinaryForm is immutable")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return all(_is_zero(c) for c in self.coeffs)

    def raw_coeffs(self):
        """Plain monomial coefficients: entry k multiplies x1^(n-k) x2^k."""
        n = self.degree
        return tuple(c * comb(n, k) for k, c in enumerate(self.coeffs))

    def coeff_strings(self):
        """Coefficients as p/q strings (JSON-friendly); rationals only."""
        return [str(c) for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and all(
            _is_zero(a - b) for a, b in zip(self.coeffs, other.coeffs)
        )

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("cannot add forms of different degrees")
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.degree != other.degree:
            raise ValueError("cannot subtract forms of different degrees")
        return BinaryForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return BinaryForm(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, BinaryForm):
            return multiply(self, other)
        if isinstance(other, (Rational, MultiPoly)):
            return BinaryForm(c * other for c in self.coeffs)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Rational, MultiPoly)):
            return BinaryForm(other * c for c in self.coeffs)
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(str(c) for c in self.coeffs)
        return f"BinaryForm(({inner}))"


def cayley_form(coeffs):
    """Build the degree-(len-1) form with the given Cayley coefficients."""
    return BinaryForm(coeffs)


def zero_form(degree):
    return BinaryForm([Fraction(0)] * (degree + 1))


def multiply(g, h):
    """Product of two forms, re-expressed in Cayley normalization."""
    m, n = g.degree, h.degree
    rg, rh = g.raw_coeffs(), h.raw_coeffs()
    raw = [Fraction(0)] * (m + n + 1)
    for i, a in enumerate(rg):
        if _is_zero(a):
            continue
        for j, b in enumerate(rh):
            raw[i + j] = raw[i + j] + a * b
    return BinaryForm(raw[k] * Fraction(1, comb(m + n, k)) for k in range(m + n + 1))


def transvectant(g, h, r):
    """The r-th transvectant (G, H)_r, a form of degree m + n - 2r.

    Order 0 is the plain product.  For quadratics, order 1 is the
    Jacobian-style pairing used for joins and meets and order 2 is the
    scalar incidence pairing.
    """
    m, n = g.degree, h.degree
    if r < 0 or r > min(m, n):
        raise OrderOutOfRange(f"order {r} invalid for degrees ({m}, {n})")
    total = zero_form(m + n - 2 * r)
    for i in range(r + 1):
        gi = BinaryForm(g.coeffs[i : i + m - r + 1])
        hj = BinaryForm(h.coeffs[r - i : n - i + 1])
        weight = comb(r, i) if i % 2 == 0 else -comb(r, i)
        total = total + multiply(gi, hj) * Fraction(weight)
    return total


def divide_exact(q, lin):
    """The unique P with Q = lin * P, for a nonzero linear form lin.

    Raises NotDivisible when the division leaves a remainder; in the
    reconstruction pipeline that signals inconsistent inputs.  Requires
    rational coefficients (or a constant-free division path), since the
    coefficient ring must support exact division by lin's coefficients.
    """
    if lin.degree != 1:
        raise ValueError("divisor must be a linear form")
    if lin.is_zero():
        raise ValueError("division by the zero form")
    n = q.degree
    if n < 1:
        raise NotDivisible("cannot divide a degree-0 form by a linear form")
    rq = list(q.raw_coeffs())
    l0, l1 = lin.coeffs
    praw = [None] * n
    if not _is_zero(l0):
        praw[0] = rq[0] / l0
        for k in range(1, n):
            praw[k] = (rq[k] - l1 * praw[k - 1]) / l0
    else:
        for k in range(n):
            praw[k] = rq[k + 1] / l1
    p = BinaryForm(praw[k] * Fraction(1, comb(n - 1, k)) for k in range(n))
    if multiply(lin, p) != q:
        raise NotDivisible("linear form does not divide the given form")
    return p


def proportional(g, h):
    """True iff G = c * H for some nonzero scalar c.

    For quadratics this is the vanishing of (G, H)_1; in general, the
    vanishing of all 2x2 minors of the coefficient pair.
    """
    if g.degree != h.degree:
        raise ValueError("proportionality needs equal degrees")
    gz, hz = g.is_zero(), h.is_zero()
    if gz and hz:
        raise BothZero("proportionality of two zero forms is undefined")
    if gz or hz:
        return False
    if g.degree == 2:
        return transvectant(g, h, 1).is_zero()
    gc, hc = g.coeffs, h.coeffs
    return all(
        _is_zero(gc[i] * hc[j] - gc[j] * hc[i])
        for i in range(len(gc))
        for j in range(i + 1, len(gc))
    )
