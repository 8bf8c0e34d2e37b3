"""Laurent expansion of a RatFunc at s = -beta in the variable w = s + beta.

Substituting t = p^(-s) = p^beta e^(-Lambda w) (Lambda a formal symbol for
ln p) turns each numerator monomial into an exponential series and each
denominator factor (1 - p^-a t^b) into either a unit series or, when
beta = a/b, a series vanishing to first order in w.  Coefficients live in
Lambda-Laurent polynomials over RadicalNum, so rational beta with
denominator D brings in exact powers p^(1/D) and everything stays exact
until a final numeric render.
"""

import math
from fractions import Fraction

from .cyclotomic import CycloNum, RadicalNum
from .scalars import to_complex


class LambdaPoly:
    """Laurent polynomial in the formal symbol Lambda (= ln p)."""

    __slots__ = ("p", "terms")

    def __init__(self, p, terms):
        self.p = p
        clean = {}
        for k, c in terms.items():
            if not isinstance(c, RadicalNum):
                c = RadicalNum.from_scalar(p, c)
            if not c.is_zero():
                clean[int(k)] = clean[int(k)] + c if int(k) in clean else c
        self.terms = {k: c for k, c in clean.items() if not c.is_zero()}

    @classmethod
    def scalar(cls, p, c):
        return cls(p, {0: c})

    @classmethod
    def zero(cls, p):
        return cls(p, {})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return LambdaPoly(self.p, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        out = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                c = c1 * c2
                out[k] = out[k] + c if k in out else c
        return LambdaPoly(self.p, out)

    def scale(self, c):
        if not isinstance(c, RadicalNum):
            c = RadicalNum.from_scalar(self.p, c)
        return LambdaPoly(self.p, {k: v * c for k, v in self.terms.items()})

    def monomial_inverse(self):
        """Inverse when the polynomial is a single invertible monomial."""
        if len(self.terms) != 1:
            raise ArithmeticError("series leading coefficient is not a monomial in Lambda")
        (k, c), = self.terms.items()
        return LambdaPoly(self.p, {-k: c.inverse()})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CycloNum, RadicalNum)):
            other = LambdaPoly.scalar(self.p, other)
        return (self - other).is_zero()

    __hash__ = None

    def render(self):
        """Numeric value with Lambda = ln p."""
        lnp = math.log(self.p)
        return sum(c.to_complex() * lnp**k for k, c in self.terms.items()) if self.terms else 0j

    def as_radical(self):
        """The Lambda-free part if the polynomial is constant in Lambda, else None."""
        if not self.terms:
            return RadicalNum.from_scalar(self.p, 0)
        if set(self.terms) == {0}:
            return self.terms[0]
        return None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join("L^%d*%r" % (k, c) for k, c in sorted(self.terms.items()))


class LaurentSeries:
    """Finitely many Laurent coefficients c_m of a RatFunc at s = -beta."""

    __slots__ = ("p", "beta", "order", "coeffs", "top")

    def __init__(self, p, beta, order, coeffs, top):
        self.p = p
        self.beta = beta
        self.order = order  # most negative exponent with nonzero coefficient
        self.coeffs = coeffs  # {m: LambdaPoly} for order <= m <= top
        self.top = top

    def c(self, m):
        return self.coeffs.get(m, LambdaPoly.zero(self.p))

    def pole_order(self):
        return max(0, -self.order)

    def render(self, m):
        return self.c(m).render()

    def __repr__(self):
        return "LaurentSeries(beta=%s, order=%d..%d)" % (self.beta, self.order, self.top)


def _exp_series(p, rate, trunc):
    """Series of exp(rate * Lambda * w) in w, coefficients Lambda-monomials."""
    out = {}
    c = Fraction(1)
    for j in range(trunc + 1):
        if j:
            c = c * rate / j
        out[j] = LambdaPoly(p, {j: c})
    return out


def _series_mul(p, u, v, trunc):
    out = {}
    for i, ci in u.items():
        if i > trunc:
            continue
        for j, cj in v.items():
            k = i + j
            if k > trunc:
                continue
            out[k] = out[k] + ci * cj if k in out else ci * cj
    return {k: c for k, c in out.items() if not c.is_zero()}


def _series_inverse(p, u, trunc):
    """Inverse of a series with invertible (Lambda-monomial) constant term."""
    inv0 = u[0].monomial_inverse()
    out = {0: inv0}
    for k in range(1, trunc + 1):
        acc = LambdaPoly.zero(p)
        for i in range(1, k + 1):
            if i in u and (k - i) in out:
                acc = acc + u[i] * out[k - i]
        out[k] = acc.scale(-1) * inv0 if not acc.is_zero() else LambdaPoly.zero(p)
    return {k: c for k, c in out.items() if not c.is_zero()}


def laurent_expand(ratfunc, beta, top):
    """Laurent coefficients of ratfunc at s = -beta up to order w^top.

    beta must be an exact rational on this path; the pole order equals the
    number of denominator factors with b*beta = a minus any numerator
    vanishing at w = 0.
    """
    if not isinstance(beta, (int, Fraction)):
        raise ValueError("exact expansion requires rational beta")
    beta = Fraction(beta)
    p = ratfunc.p
    if ratfunc.is_zero():
        return LaurentSeries(p, beta, 0, {}, top)

    vanishing = sum(1 for fac in ratfunc.den if Fraction(fac.a, fac.b) == beta)
    trunc = top + vanishing

    # numerator: sum_k c_k p^(k beta) exp(-k Lambda w)
    series = {}
    for k, c in ratfunc.num.items():
        if isinstance(c, (int, Fraction, CycloNum)):
            base = RadicalNum.from_power(p, k * beta) * c
        else:
            raise ValueError("exact expansion requires exact coefficients")
        ek = _exp_series(p, Fraction(-k), trunc)
        for j, lam in ek.items():
            term = lam.scale(base)
            series[j] = series[j] + term if j in series else term
    series = {k: c for k, c in series.items() if not c.is_zero()}

    shift = 0
    for fac in ratfunc.den:
        rate = Fraction(fac.b * beta - fac.a)
        if rate == 0:
            # (1 - e^{-b Lambda w}) = w * (b Lambda - b^2 Lambda^2 w / 2 + ...)
            unit = {}
            c = Fraction(1)
            for j in range(1, trunc + 2):
                c = c * Fraction(-fac.b) / j
                unit[j - 1] = LambdaPoly(p, {j: -c})
            shift -= 1
            series = _series_mul(p, series, _series_inverse(p, unit, trunc), trunc)
        else:
            const = RadicalNum.from_scalar(p, 1) - RadicalNum.from_power(p, rate)
            fac_series = {0: LambdaPoly(p, {0: const})}
            cpow = RadicalNum.from_power(p, rate)
            c = Fraction(1)
            for j in range(1, trunc + 1):
                c = c * Fraction(-fac.b) / j
                fac_series[j] = LambdaPoly(p, {j: -c}).scale(cpow)
            series = _series_mul(p, series, _series_inverse(p, fac_series, trunc), trunc)

    coeffs = {}
    order = None
    for j in sorted(series):
        m = j + shift
        if m > top:
            continue
        coeffs[m] = series[j]
        if order is None:
            order = m
    if order is None:
        order = 0
    return LaurentSeries(p, beta, order, coeffs, top)


def circle_sample_coefficient(ratfunc, beta, m, radius=1e-3, samples=64):
    """Numeric Laurent coefficient by sampling a circle around s = -beta.

    Independent of the exact expansion path; used as an oracle in tests.
    """
    import cmath

    total = 0j
    for j in range(samples):
        w = radius * cmath.exp(2j * cmath.pi * j / samples)
        s = complex(-float(beta)) + w
        total += ratfunc.evaluate(s) * w ** (-m)
    return total / samples
