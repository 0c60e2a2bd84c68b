"""Sparse multivariate polynomials over the rationals.

These are the ring the symbolic identity checks live in.  A polynomial
keeps an ordered tuple of variable names together with a map from dense
exponent vectors (one slot per variable) to nonzero Fraction coefficients.
Construction normalizes: zero coefficients are dropped, unused variables
are pruned and the remaining ones are sorted by name, so equality is plain
structural equality and the zero polynomial is the empty term map.

Variable lists of two operands are merged by name, which keeps identities
in up to a dozen or so letters cheap: the sparsity that matters here is in
the terms, not in the variables.
"""

from fractions import Fraction
from numbers import Rational

from .errors import MissingAssignment


def _grlex_key(exp):
    # graded lexicographic, used only for canonical printing
    return (-sum(exp), tuple(-e for e in exp))


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars=(), terms=None):
        vars = tuple(vars)
        if len(set(vars)) != len(vars):
            raise ValueError(f"duplicate variable names: {vars}")
        clean = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != len(vars):
                raise ValueError("exponent vector does not match variable list")
            if any(e < 0 for e in exp):
                raise ValueError("negative exponent")
            coeff = Fraction(coeff)
            if coeff:
                clean[exp] = coeff
        used = [i for i in range(len(vars)) if any(e[i] for e in clean)]
        order = sorted(used, key=lambda i: vars[i])
        if tuple(vars[i] for i in order) != vars:
            vars = tuple(vars[i] for i in order)
            clean = {tuple(exp[i] for i in order): c for exp, c in clean.items()}
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def var(cls, name):
        return cls((str(name),), {(1,): Fraction(1)})

    @classmethod
    def const(cls, value):
        value = Fraction(value)
        return cls((), {(): value} if value else {})

    @classmethod
    def _promote(cls, value):
        if isinstance(value, MultiPoly):
            return value
        if isinstance(value, Rational):
            return cls.const(value)
        return None

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def constant_value(self):
        """The value of a constant polynomial, as a Fraction."""
        if self.vars:
            raise ValueError(f"not a constant polynomial: {self}")
        return self.terms.get((), Fraction(0))

    # -- arithmetic ---------------------------------------------------

    def _aligned(self, other):
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        vars = tuple(sorted(set(self.vars) | set(other.vars)))
        return vars, _remap(self, vars), _remap(other, vars)

    def __add__(self, other):
        other = MultiPoly._promote(other)
        if other is None:
            return NotImplemented
        vars, left, right = self._aligned(other)
        out = dict(left)
        for exp, c in right.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return MultiPoly(vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = MultiPoly._promote(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = MultiPoly._promote(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, Rational):
            q = Fraction(other)
            return MultiPoly(self.vars, {e: c * q for e, c in self.terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        vars, left, right = self._aligned(other)
        out = {}
        for e1, c1 in left.items():
            for e2, c2 in right.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                out[exp] = out.get(exp, Fraction(0)) + c1 * c2
        return MultiPoly(vars, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        out = MultiPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = MultiPoly._promote(other)
        if other is None:
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, tuple(sorted(self.terms.items()))))

    # -- evaluation and renaming --------------------------------------

    def evaluate(self, assignment):
        """Evaluate at an exact point; every variable must be assigned."""
        missing = [v for v in self.vars if v not in assignment]
        if missing:
            raise MissingAssignment(f"no value for variable(s) {', '.join(missing)}")
        values = [Fraction(assignment[v]) for v in self.vars]
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            term = coeff
            for val, e in zip(values, exp):
                if e:
                    term *= val**e
            total += term
        return total

    def rename_vars(self, mapping):
        """Return the polynomial with variables renamed by ``mapping``.

        Handles permutations and non-injective maps alike (exponents of
        merged variables are added within each term).
        """
        names = sorted({mapping.get(v, v) for v in self.vars})
        pos = {v: i for i, v in enumerate(names)}
        out = {}
        for exp, coeff in self.terms.items():
            ne = [0] * len(names)
            for v, e in zip(self.vars, exp):
                ne[pos[mapping.get(v, v)]] += e
            key = tuple(ne)
            out[key] = out.get(key, Fraction(0)) + coeff
        return MultiPoly(names, out)

    # -- printing ------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, key=_grlex_key):
            coeff = self.terms[exp]
            factors = []
            for v, e in zip(self.vars, exp):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(coeff))
            elif abs(coeff) == 1:
                body = mono
            else:
                body = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"MultiPoly({self})"


def _remap(poly, new_vars):
    pos = {v: i for i, v in enumerate(new_vars)}
    idx = [pos[v] for v in poly.vars]
    n = len(new_vars)
    out = {}
    for exp, coeff in poly.terms.items():
        ne = [0] * n
        for j, e in zip(idx, exp):
            ne[j] = e
        out[tuple(ne)] = coeff
    return out
