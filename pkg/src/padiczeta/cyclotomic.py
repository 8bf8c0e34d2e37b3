"""Exact cyclotomic numbers and rational powers of p.

CycloNum represents elements of Q(zeta_m) as sparse rational combinations
of roots of unity; equality reduces against the m-th cyclotomic polynomial,
so cancellations such as sums over full cosets are detected exactly.

RadicalNum represents finite sums  sum_r  c_r * p^r  with rational exponents
r in [0,1) and cyclotomic coefficients c_r.  This is the coefficient ring
needed when a zeta value is expanded at a rational exponent beta = a/b: the
substitution t = p^beta introduces p^(1/b).  x^D - p is Eisenstein at p, so
the rational-coefficient part Q[p^(1/D)] is a genuine field and inversion
there is exact.  All arithmetic preserves the exponent grading; equality is
graded componentwise.
"""

import cmath
import math
from fractions import Fraction
from functools import lru_cache


def divisors(m):
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def _int_poly_div(num, den):
    """Exact division of integer polynomials (dense, low-to-high, monic den)."""
    num = list(num)
    q = [0] * (len(num) - len(den) + 1)
    for i in range(len(q) - 1, -1, -1):
        c = num[i + len(den) - 1]
        q[i] = c
        if c:
            for j, dj in enumerate(den):
                num[i + j] -= c * dj
    if any(num[: len(den) - 1]):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_poly(m):
    """Dense integer coefficients of the m-th cyclotomic polynomial."""
    poly = [-1] + [0] * (m - 1) + [1]
    for d in divisors(m):
        if d < m:
            poly = _int_poly_div(poly, cyclotomic_poly(d))
    return tuple(poly)


def _lcm(a, b):
    return a * b // math.gcd(a, b)


class CycloNum:
    """An exact element of Q(zeta_m), stored as sparse {exponent: Fraction}."""

    __slots__ = ("m", "co", "_red")

    def __init__(self, m, co):
        self.m = m
        folded = {}
        for j, c in co.items():
            c = Fraction(c)
            if c:
                j %= m
                folded[j] = folded.get(j, Fraction(0)) + c
        self.co = {j: c for j, c in folded.items() if c}
        self._red = None

    @classmethod
    def _make(cls, m, co):
        """Internal fast path: co already folded mod m with nonzero Fractions."""
        obj = cls.__new__(cls)
        obj.m = m
        obj.co = co
        obj._red = None
        return obj

    @classmethod
    def from_rational(cls, r):
        r = Fraction(r)
        return cls._make(1, {0: r} if r else {})

    @classmethod
    def root(cls, m, k=1):
        """zeta_m^k = exp(2*pi*i*k/m)."""
        return cls._make(m, {k % m: Fraction(1)})

    def _embedded(self, m2):
        if m2 == self.m:
            return self.co
        step = m2 // self.m
        return {j * step: c for j, c in self.co.items()}

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        m = _lcm(self.m, other.m)
        out = dict(self._embedded(m))
        for j, c in other._embedded(m).items():
            s = out.get(j)
            if s is None:
                out[j] = c
            else:
                s = s + c
                if s:
                    out[j] = s
                else:
                    del out[j]
        return CycloNum._make(m, out)

    __radd__ = __add__

    def __neg__(self):
        return CycloNum._make(self.m, {j: -c for j, c in self.co.items()})

    def __sub__(self, other):
        r = self.__add__(-other if isinstance(other, CycloNum) else -Fraction(other))
        return r

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if not f:
                return CycloNum._make(1, {})
            return CycloNum._make(self.m, {j: c * f for j, c in self.co.items()})
        if not isinstance(other, CycloNum):
            return NotImplemented
        m = _lcm(self.m, other.m)
        a = self._embedded(m)
        b = other._embedded(m)
        out = {}
        for j1, c1 in a.items():
            for j2, c2 in b.items():
                j = (j1 + j2) % m
                s = out.get(j)
                out[j] = c1 * c2 if s is None else s + c1 * c2
        return CycloNum._make(m, {j: c for j, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def conj(self):
        return CycloNum._make(self.m, {(-j) % self.m: c for j, c in self.co.items()})

    def reduced(self):
        """Canonical coefficients modulo the cyclotomic polynomial (low-to-high)."""
        if self._red is not None:
            return self._red
        phi = cyclotomic_poly(self.m)
        deg = len(phi) - 1
        dense = [Fraction(0)] * self.m
        for j, c in self.co.items():
            dense[j] += c
        # remainder modulo the monic integer polynomial phi
        for i in range(self.m - 1, deg - 1, -1):
            c = dense[i]
            if c:
                dense[i] = Fraction(0)
                for k in range(deg):
                    dense[i - deg + k] -= c * phi[k]
        self._red = dense[:deg]
        return self._red

    def is_zero(self):
        if not self.co:
            return True
        if len(self.co) == 1 and 0 in self.co:
            return False
        # sound float witness: an exact zero evaluates to roundoff only,
        # far below the threshold, so a clearly nonzero render is decisive
        try:
            scale = sum(abs(float(c)) for c in self.co.values())
            if abs(self.to_complex()) > 1e-7 * (1.0 + scale):
                return False
        except OverflowError:
            pass
        return all(c == 0 for c in self.reduced())

    def is_rational(self):
        return self.as_rational() is not None

    def as_rational(self):
        """The value as a Fraction if it lies in Q, else None."""
        if not self.co:
            return Fraction(0)
        if set(self.co) == {0}:
            return self.co[0]
        red = self.reduced()
        if any(c for c in red[1:]):
            return None
        return red[0] if red else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloNum.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def to_complex(self):
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * j / self.m) for j, c in self.co.items()
        ) if self.co else 0j

    def __repr__(self):
        if not self.co:
            return "Cyclo(0)"
        parts = ["%s*z%d^%d" % (c, self.m, j) for j, c in sorted(self.co.items())]
        return "Cyclo(" + " + ".join(parts) + ")"


def _frac_floor(q):
    return q.numerator // q.denominator


class RadicalNum:
    """A finite sum  sum c_r * p^r  with r in [0,1) rational, c_r cyclotomic.

    Integer parts of exponents are folded into the coefficients, so the
    representation is graded by the fractional exponent.  Inversion is
    supported when every coefficient is rational (extended gcd against the
    Eisenstein polynomial x^D - p); that is the only case the engines need.
    """

    __slots__ = ("p", "terms")

    def __init__(self, p, terms):
        self.p = p
        folded = {}
        for r, c in terms.items():
            r = Fraction(r)
            if isinstance(c, (int, Fraction)):
                c = Fraction(c)
            fl = _frac_floor(r)
            if fl:
                c = c * (Fraction(p) ** fl)
                r = r - fl
            if _is_zero_coeff(c):
                continue
            if r in folded:
                folded[r] = folded[r] + c
            else:
                folded[r] = c
        self.terms = {r: c for r, c in folded.items() if not _is_zero_coeff(c)}

    @classmethod
    def from_scalar(cls, p, c):
        return cls(p, {Fraction(0): c})

    @classmethod
    def from_power(cls, p, q, coeff=1):
        """coeff * p^q for a rational exponent q."""
        return cls(p, {Fraction(q): coeff})

    def _coerce(self, other):
        if isinstance(other, (int, Fraction, CycloNum)):
            return RadicalNum.from_scalar(self.p, other)
        if isinstance(other, RadicalNum):
            if other.p != self.p:
                raise ValueError("mixed primes in radical arithmetic")
            return other
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for r, c in o.terms.items():
            out[r] = out[r] + c if r in out else c
        return RadicalNum(self.p, out)

    __radd__ = __add__

    def __neg__(self):
        return RadicalNum(self.p, {r: -c for r, c in self.terms.items()})

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = {}
        for r1, c1 in self.terms.items():
            for r2, c2 in o.terms.items():
                r = r1 + r2
                c = c1 * c2
                if r in out:
                    out[r] = out[r] + c
                else:
                    out[r] = c
        return RadicalNum(self.p, out)

    __rmul__ = __mul__

    def is_zero(self):
        return all(_is_zero_coeff(c) for c in self.terms.values())

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).is_zero()

    __hash__ = None

    def conj(self):
        return RadicalNum(
            self.p,
            {r: (c.conj() if isinstance(c, CycloNum) else c) for r, c in self.terms.items()},
        )

    def as_rational(self):
        if not self.terms:
            return Fraction(0)
        if set(self.terms) != {Fraction(0)}:
            return None
        c = self.terms[Fraction(0)]
        return c.as_rational() if isinstance(c, CycloNum) else c

    def _rational_vector(self):
        """Exponent denominator D and dense rational coefficients in basis p^(j/D)."""
        D = 1
        for r in self.terms:
            D = _lcm(D, r.denominator)
        vec = [Fraction(0)] * D
        for r, c in self.terms.items():
            if isinstance(c, CycloNum):
                c = c.as_rational()
                if c is None:
                    raise ArithmeticError("inverse requires rational coefficients")
            vec[(r * D).numerator % D if D > 1 else 0] += c
        return D, vec

    def inverse(self):
        """Exact inverse in Q(p^(1/D)); coefficients must be rational."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        D, vec = self._rational_vector()
        if D == 1:
            return RadicalNum.from_scalar(self.p, Fraction(1) / vec[0])
        # extended gcd of vec(x) and x^D - p over Q[x]
        mod = [Fraction(-self.p)] + [Fraction(0)] * (D - 1) + [Fraction(1)]
        inv = _poly_modular_inverse(vec, mod)
        return RadicalNum(self.p, {Fraction(j, D): c for j, c in enumerate(inv) if c})

    def to_complex(self):
        out = 0j
        for r, c in self.terms.items():
            cval = c.to_complex() if isinstance(c, CycloNum) else complex(c)
            out += cval * (self.p ** float(r))
        return out

    def __repr__(self):
        if not self.terms:
            return "Rad(0)"
        parts = ["(%r)*%d^%s" % (c, self.p, r) for r, c in sorted(self.terms.items())]
        return "Rad(" + " + ".join(parts) + ")"


def _is_zero_coeff(c):
    if isinstance(c, CycloNum):
        return c.is_zero()
    return c == 0


def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = list(a)
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, bj in enumerate(b):
                a[i + j] -= c * bj
    return q, _poly_trim(a[: len(b) - 1])


def _poly_modular_inverse(a, mod):
    """Inverse of a(x) modulo mod(x) over Q via extended Euclid."""
    a = _poly_trim([Fraction(c) for c in a])
    r0, r1 = list(mod), a
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        s = _poly_sub(s0, _poly_mul(q, s1))
        r0, r1, s0, s1 = r1, r, s1, s
    if len(r0) != 1:
        raise ZeroDivisionError("element is a zero divisor modulo x^D - p")
    c = r0[0]
    out = [x / c for x in s0]
    _, out = _poly_divmod(out, list(mod)) if len(out) >= len(mod) else (None, out)
    out += [Fraction(0)] * (len(mod) - 1 - len(out))
    return out


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _poly_trim(out)


def _poly_sub(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, ai in enumerate(a):
        out[i] += ai
    for i, bi in enumerate(b):
        out[i] -= bi
    return _poly_trim(out)
