"""Exact p-adic scalars, valuations, and coset balls in Q_p^n.

Everything here is exact: scalars are rationals, ball centers live in
Z[1/p] in a canonical reduced form, and every valuation is computed from
the factorization of an integer.  There is deliberately no truncated
digit arithmetic anywhere.
"""

import math
from fractions import Fraction

INF = math.inf


def is_prime(p):
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class PrimeContext:
    """A prime together with engine defaults (recursion depth, tolerance)."""

    __slots__ = ("p", "default_depth", "tolerance")

    def __init__(self, p, default_depth=40, tolerance=1e-9):
        if not is_prime(p):
            raise ValueError("p = %r is not prime" % (p,))
        if default_depth < 1:
            raise ValueError("default depth must be positive")
        self.p = p
        self.default_depth = default_depth
        self.tolerance = tolerance

    def __repr__(self):
        return "PrimeContext(p=%d)" % self.p


def int_valuation(n, p):
    """Exponent of p in the integer n; INF for n = 0."""
    if n == 0:
        return INF
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def valuation_of(r, p):
    """Exact p-adic valuation of a rational; INF for zero."""
    r = Fraction(r)
    if r == 0:
        return INF
    return int_valuation(r.numerator, p) - int_valuation(r.denominator, p)


def abs_p(r, p):
    """p-adic absolute value |r| = p^{-v(r)} as an exact Fraction (0 for r=0)."""
    v = valuation_of(r, p)
    if v is INF:
        return Fraction(0)
    return Fraction(p) ** (-v)


def angular_component(r, p, k=1):
    """Unit part (r * p^{-v(r)}) mod p^k as an integer in [1, p^k).

    The zero distributional convention (chi(0) = 0) belongs to callers;
    here zero input is an error.
    """
    r = Fraction(r)
    if r == 0:
        raise ZeroDivisionError("angular component undefined at zero")
    if k < 1:
        raise ValueError("precision k must be >= 1")
    v = valuation_of(r, p)
    u = r * Fraction(p) ** (-v)
    mod = p**k
    return u.numerator * pow(u.denominator, -1, mod) % mod


def frac_part(x, p):
    """p-adic fractional part of a rational, as a Fraction in [0, 1).

    The image of x under Q_p -> Q_p/Z_p, represented in Z[1/p].  Prime-to-p
    parts of the denominator are inverted modulo the p-power part.
    """
    x = Fraction(x)
    if x == 0:
        return Fraction(0)
    j = int_valuation(x.denominator, p)
    if j == 0:
        return Fraction(0)
    pj = p**j
    d = x.denominator // pj
    a = x.numerator * pow(d, -1, pj) % pj
    return Fraction(a, pj)


class PAdicScalar:
    """A rational number carrying its exact p-adic valuation."""

    __slots__ = ("value", "p", "valuation")

    def __init__(self, value, p):
        self.value = Fraction(value)
        self.p = p
        self.valuation = valuation_of(self.value, p)

    def abs(self):
        return abs_p(self.value, self.p)

    def angular(self, k=1):
        return angular_component(self.value, self.p, k)

    def __mul__(self, other):
        return PAdicScalar(self.value * Fraction(other.value), self.p)

    def __add__(self, other):
        return PAdicScalar(self.value + Fraction(other.value), self.p)

    def __eq__(self, other):
        return isinstance(other, PAdicScalar) and self.p == other.p and self.value == other.value

    def __repr__(self):
        return "PAdicScalar(%s, p=%d, v=%s)" % (self.value, self.p, self.valuation)


def _canonical_coord(c, e, p):
    """Reduce a rational coordinate modulo p^e to the canonical m/p^j form.

    The representative r satisfies v(r - c) >= e, has denominator p^j with
    j = max(0, -v(c)), and lies in [0, p^e).  Reducing twice is the identity.
    """
    c = Fraction(c)
    v = valuation_of(c, p)
    if v is INF or v >= e:
        return Fraction(0)
    j = max(0, -int(v))
    scaled = c * Fraction(p) ** j
    mod = p ** (e + j)
    a = scaled.numerator * pow(scaled.denominator, -1, mod) % mod
    return Fraction(a, p**j)


class Ball:
    """A coset a + p^e Z_p^n with canonical center coordinates in Z[1/p]."""

    __slots__ = ("p", "n", "level", "center")

    def __init__(self, p, level, center):
        self.p = p
        self.level = int(level)
        self.center = tuple(_canonical_coord(c, self.level, p) for c in center)
        self.n = len(self.center)
        if self.n == 0:
            raise ValueError("ball needs at least one coordinate")

    @classmethod
    def unit(cls, p, n):
        return cls(p, 0, (0,) * n)

    def key(self):
        return (self.level, self.center)

    def volume(self):
        return Fraction(self.p) ** (-self.level * self.n)

    def subdivide(self):
        """The p^n level-(e+1) children, in lexicographic digit order."""
        p, e = self.p, self.level
        step = Fraction(p) ** e
        children = []
        digits = [0] * self.n

        def rec(i):
            if i == self.n:
                c = tuple(self.center[j] + digits[j] * step for j in range(self.n))
                children.append(Ball(p, e + 1, c))
                return
            for d in range(p):
                digits[i] = d
                rec(i + 1)

        rec(0)
        return children

    def reduce_to_level(self, e):
        """The unique level-e ball containing this one (requires e <= level)."""
        if e > self.level:
            raise ValueError("can only coarsen, not refine")
        return Ball(self.p, e, self.center)

    def contains(self, other):
        return (
            other.level >= self.level
            and other.reduce_to_level(self.level).center == self.center
        )

    def contains_point(self, x):
        return all(
            valuation_of(Fraction(xi) - ci, self.p) >= self.level
            for xi, ci in zip(x, self.center)
        )

    def is_centered_at_zero(self):
        return all(c == 0 for c in self.center)

    def __eq__(self, other):
        return (
            isinstance(other, Ball)
            and self.p == other.p
            and self.level == other.level
            and self.center == other.center
        )

    def __hash__(self):
        return hash((self.p, self.level, self.center))

    def __repr__(self):
        c = ",".join(str(x) for x in self.center)
        return "Ball(%s @ %d)" % (c, self.level)
