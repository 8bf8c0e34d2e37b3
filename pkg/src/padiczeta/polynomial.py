"""Multivariate polynomials over Q with divided-power Taylor expansion.

Hasse coefficients f_alpha(a), defined by f(a+h) = sum_alpha f_alpha(a) h^alpha,
stay p-integral even when p <= deg f, which is what the ultrametric
certificates in the zeta engine rely on.
"""

import math
from fractions import Fraction

from .padic import int_valuation


class Polynomial:
    """Finitely supported map from exponent multi-indices to Fractions."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms):
        self.n = n
        clean = {}
        for alpha, c in terms.items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != n:
                raise ValueError("exponent %r has wrong arity" % (alpha,))
            if any(a < 0 for a in alpha):
                raise ValueError("negative exponent in %r" % (alpha,))
            c = Fraction(c)
            if c:
                clean[alpha] = clean.get(alpha, Fraction(0)) + c
        self.terms = {a: c for a, c in clean.items() if c}

    @classmethod
    def zero(cls, n):
        return cls(n, {})

    @classmethod
    def constant(cls, n, c):
        return cls(n, {(0,) * n: c})

    @classmethod
    def variable(cls, i, n):
        e = [0] * n
        e[i] = 1
        return cls(n, {tuple(e): 1})

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(a) == 0 for a in self.terms)

    def degree(self):
        return max((sum(a) for a in self.terms), default=0)

    def max_degrees(self):
        """Per-variable maximum exponents."""
        degs = [0] * self.n
        for a in self.terms:
            for i, ai in enumerate(a):
                degs[i] = max(degs[i], ai)
        return tuple(degs)

    def homogeneous_degree(self):
        """Common total degree if homogeneous and nonconstant, else None."""
        degs = {sum(a) for a in self.terms}
        if len(degs) == 1:
            d = degs.pop()
            if d >= 1:
                return d
        return None

    def key(self):
        return tuple(sorted(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Fraction(0)) + c
        return Polynomial(self.n, out)

    def __sub__(self, other):
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out.get(a, Fraction(0)) - c
        return Polynomial(self.n, out)

    def __neg__(self):
        return Polynomial(self.n, {a: -c for a, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            return Polynomial(self.n, {a: c * f for a, c in self.terms.items()})
        out = {}
        for a1, c1 in self.terms.items():
            for a2, c2 in other.terms.items():
                a = tuple(x + y for x, y in zip(a1, a2))
                out[a] = out.get(a, Fraction(0)) + c1 * c2
        return Polynomial(self.n, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.key()))

    def evaluate(self, point):
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for a, c in self.terms.items():
            v = c
            for x, e in zip(point, a):
                if e:
                    v *= x**e
            total += v
        return total

    def derivative(self, i):
        out = {}
        for a, c in self.terms.items():
            if a[i]:
                b = list(a)
                b[i] -= 1
                out[tuple(b)] = out.get(tuple(b), Fraction(0)) + c * a[i]
        return Polynomial(self.n, out)

    def hasse_taylor(self, a):
        """All divided-power coefficients f_alpha(a), as {alpha: Fraction}.

        Computed by shifting one variable at a time with exact binomials,
        so f(a+h) = sum f_alpha(a) h^alpha holds as a polynomial identity.
        """
        a = [Fraction(x) for x in a]
        if len(a) != self.n:
            raise ValueError("point has wrong dimension")
        cur = self.terms
        for i in range(self.n):
            nxt = {}
            for alpha, c in cur.items():
                e = alpha[i]
                if e == 0 or a[i] == 0:
                    nxt[alpha] = nxt.get(alpha, Fraction(0)) + c
                    continue
                powv = Fraction(1)
                # k runs from e down to 0; coefficient binom(e,k) a_i^(e-k) h_i^k
                for k in range(e, -1, -1):
                    b = list(alpha)
                    b[i] = k
                    coef = c * math.comb(e, k) * powv
                    bt = tuple(b)
                    nxt[bt] = nxt.get(bt, Fraction(0)) + coef
                    powv *= a[i]
            cur = {al: co for al, co in nxt.items() if co}
        return cur

    def shift(self, a):
        """The polynomial h -> f(a + h)."""
        return Polynomial(self.n, self.hasse_taylor(a))

    def scale_variables(self, factor):
        """The polynomial y -> f(factor * y)."""
        factor = Fraction(factor)
        return Polynomial(
            self.n, {a: c * factor ** sum(a) for a, c in self.terms.items()}
        )

    def integerize(self, p):
        """Write f = p^v * (1/L) * F with F integral of p-free content.

        Returns (v, L, F): v is the minimum p-valuation over coefficients,
        L a p-free positive integer, F a Polynomial with integer
        coefficients at least one of which is a p-unit.  Pointwise
        |f(x)| = p^{-v} |F(x)| since |1/L| = 1.
        """
        if self.is_zero():
            raise ValueError("cannot integerize the zero polynomial")
        v = min(
            int_valuation(c.numerator, p) - int_valuation(c.denominator, p)
            for c in self.terms.values()
        )
        pv = Fraction(p) ** (-v)
        scaled = {a: c * pv for a, c in self.terms.items()}
        L = 1
        for c in scaled.values():
            L = L * c.denominator // math.gcd(L, c.denominator)
        F = Polynomial(self.n, {a: c * L for a, c in scaled.items()})
        assert all(c.denominator == 1 for c in F.terms.values())
        return v, L, F

    def __repr__(self):
        from .parsing import format_polynomial

        return "Polynomial(%s)" % format_polynomial(self)
