"""Exact rational functions in t = p^(-s) with factored denominators.

The denominator is kept as a multiset of factors (1 - p^-a t^b), never
expanded, so pole real parts -a/b can be read off syntactically.  The
numerator is a Laurent polynomial in t whose coefficients may be rational,
cyclotomic, or complex.  Equality is tested after cross-multiplication.
"""

import cmath
from collections import Counter
from fractions import Fraction
from typing import NamedTuple

from .scalars import is_exact, sadd, sdiv_exact, seq, sis_zero, smul, to_complex


class DenFactor(NamedTuple):
    """The factor (1 - p^-a t^b); its zeros have Re(s) = -a/b."""

    a: int
    b: int


class PoleError(ArithmeticError):
    def __init__(self, factor, s0):
        self.factor = factor
        self.s0 = s0
        super().__init__(
            "evaluation at s = %s hits the zero of (1 - p^-%d t^%d)" % (s0, factor.a, factor.b)
        )


def _poly_add(u, v):
    out = dict(u)
    for k, c in v.items():
        s = sadd(out.get(k, Fraction(0)), c)
        if sis_zero(s):
            out.pop(k, None)
        else:
            out[k] = s
    return out


def _poly_mul(u, v):
    out = {}
    for k1, c1 in u.items():
        for k2, c2 in v.items():
            k = k1 + k2
            s = sadd(out.get(k, Fraction(0)), smul(c1, c2))
            if sis_zero(s):
                out.pop(k, None)
            else:
                out[k] = s
    return out


def _factor_poly(fac, p):
    return {0: Fraction(1), fac.b: Fraction(-1, p**fac.a) if fac.a >= 0 else -Fraction(p) ** (-fac.a)}


class RatFunc:
    """num(t) / prod(1 - p^-a t^b) with num a Laurent polynomial in t."""

    __slots__ = ("p", "num", "den")

    def __init__(self, p, num, den=()):
        self.p = p
        self.num = {int(k): c for k, c in num.items() if not sis_zero(c)}
        if self.num:
            self.den = tuple(sorted(Counter(DenFactor(*f) for f in den).elements()))
        else:
            self.den = ()

    @classmethod
    def zero(cls, p):
        return cls(p, {})

    @classmethod
    def constant(cls, p, c):
        return cls(p, {0: c})

    @classmethod
    def monomial(cls, p, c, k):
        return cls(p, {k: c})

    def is_zero(self):
        return not self.num

    def is_exact(self):
        return all(is_exact(c) for c in self.num.values())

    def _den_counter(self):
        return Counter(self.den)

    def __add__(self, other):
        if self.p != other.p:
            raise ValueError("mixed primes")
        d1 = Counter(self.den)
        d2 = Counter(other.den)
        common = d1 | d2
        num1 = self.num
        for fac in (common - d1).elements():
            num1 = _poly_mul(num1, _factor_poly(fac, self.p))
        num2 = other.num
        for fac in (common - d2).elements():
            num2 = _poly_mul(num2, _factor_poly(fac, self.p))
        return RatFunc(self.p, _poly_add(num1, num2), tuple(common.elements()))

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        if self.p != other.p:
            raise ValueError("mixed primes")
        return RatFunc(
            self.p, _poly_mul(self.num, other.num), self.den + other.den
        )

    def scale(self, c):
        if sis_zero(c):
            return RatFunc.zero(self.p)
        return RatFunc(self.p, {k: smul(c, v) for k, v in self.num.items()}, self.den)

    def scale_monomial(self, c, k):
        """Multiply by the monomial c * t^k."""
        if sis_zero(c):
            return RatFunc.zero(self.p)
        return RatFunc(self.p, {kk + k: smul(c, v) for kk, v in self.num.items()}, self.den)

    def divide_by_factor(self, a, b):
        """Append the denominator factor (1 - p^-a t^b)."""
        if self.is_zero():
            return self
        return RatFunc(self.p, self.num, self.den + (DenFactor(a, b),))

    def equals(self, other):
        """Equality as rational functions, after cross-multiplication."""
        if self.p != other.p:
            return False
        diff = self - other
        return diff.is_zero()

    def evaluate(self, s0):
        """Value at s = s0 (complex); exact pole detection for rational s0."""
        if isinstance(s0, (int, Fraction)):
            s0f = Fraction(s0)
            for fac in self.den:
                if s0f == Fraction(-fac.a, fac.b):
                    raise PoleError(fac, s0)
        t0 = complex(self.p) ** (-complex(s0))
        den = 1.0 + 0j
        for fac in self.den:
            term = 1 - self.p ** (-fac.a) * t0**fac.b
            if not isinstance(s0, (int, Fraction)) and abs(term) < 1e-13:
                raise PoleError(fac, s0)
            den *= term
        num = 0j
        for k, c in self.num.items():
            num += to_complex(c) * t0**k
        return num / den

    def evaluate_exact(self, s0):
        """Exact value at an integer s0 (where t = p^-s0 is rational)."""
        s0 = int(s0)
        t0 = Fraction(self.p) ** (-s0)
        den = Fraction(1)
        for fac in self.den:
            term = 1 - Fraction(1, self.p**fac.a) * t0**fac.b
            if term == 0:
                raise PoleError(fac, s0)
            den *= term
        num = Fraction(0)
        for k, c in self.num.items():
            num = sadd(num, smul(c, t0**k))
        return sdiv_exact(num, den)

    def _divisible_by(self, fac):
        """Try exact division of the numerator by (1 - p^-a t^b)."""
        if not self.num:
            return None
        poly = dict(self.num)
        lo = min(poly)
        hi = max(poly)
        c_b = -Fraction(1, self.p**fac.a)
        # divide treating poly as polynomial in t after shifting by t^-lo
        quot = {}
        work = {k - lo: v for k, v in poly.items()}
        deg = hi - lo
        for k in range(deg, fac.b - 1, -1):
            c = work.get(k)
            if c is None or sis_zero(c):
                continue
            q = sdiv_exact(c, c_b)
            quot[k - fac.b] = q
            for kk, fc in ((0, Fraction(1)), (fac.b, c_b)):
                s = sadd(work.get(k - fac.b + kk, Fraction(0)), smul(q, -fc))
                if sis_zero(s):
                    work.pop(k - fac.b + kk, None)
                else:
                    work[k - fac.b + kk] = s
        rem = {k: v for k, v in work.items() if not sis_zero(v)}
        if rem:
            return None
        return {k + lo: v for k, v in quot.items() if not sis_zero(v)}

    def poles(self):
        """Pole locations Re(s) = -a/b with multiplicities after removability.

        A factor is dropped when it divides the numerator exactly.  For
        b >= 2 a numerator may vanish at a strict subset of a factor's
        roots; such partial cancellation is left in place (the Laurent
        expansion is authoritative at any specific point).
        """
        num = dict(self.num)
        remaining = []
        for fac in self.den:
            trial = RatFunc(self.p, num)._divisible_by(fac)
            if trial is not None:
                num = trial
            else:
                remaining.append(fac)
        locs = {}
        for fac in remaining:
            key = Fraction(-fac.a, fac.b)
            locs.setdefault(key, []).append(fac)
        return sorted(locs.items(), reverse=True)

    def reduced(self):
        """Equivalent RatFunc with numerator-dividing factors cancelled."""
        num = dict(self.num)
        kept = []
        for fac in self.den:
            trial = RatFunc(self.p, num)._divisible_by(fac)
            if trial is not None:
                num = trial
            else:
                kept.append(fac)
        return RatFunc(self.p, num, tuple(kept))

    def key(self):
        return (tuple(sorted(self.num.items(), key=lambda t: t[0])), self.den)

    def __repr__(self):
        if not self.num:
            return "RatFunc(0)"
        num = " + ".join("(%r)t^%d" % (c, k) for k, c in sorted(self.num.items()))
        den = "".join("(1 - %d^-%d t^%d)" % (self.p, a, b) for a, b in self.den)
        return "RatFunc(%s%s)" % (num, (" / " + den) if den else "")


def format_ratfunc(r):
    """Human-readable factored form, rationals rendered exactly."""
    if r.is_zero():
        return "0"
    parts = []
    for k, c in sorted(r.num.items()):
        from .scalars import as_rational

        cr = as_rational(c)
        cs = str(cr) if cr is not None else repr(c)
        parts.append("%s*t^%d" % (cs, k) if k else cs)
    num = " + ".join(parts)
    if not r.den:
        return num
    den = " * ".join("(1 - %d^-%d*t^%d)" % (r.p, a, b) for a, b in r.den)
    return "(%s) / (%s)" % (num, den)
