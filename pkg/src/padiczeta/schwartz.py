"""Schwartz-Bruhat test functions on Q_p^n and their Fourier layer.

A test function is a finite weighted sum of indicators of pairwise
disjoint balls; being locally constant with compact support is built into
the representation.  The Fourier transform (kernel psi(-[x,y]), self-dual
Haar measure with vol(Z_p^n) = 1) is realized two ways: per-ball in closed
form (exact, cyclotomic coefficients) and as a finite-group DFT on a dense
grid (float, numpy).  The two must agree and tests enforce it.
"""

import cmath
from fractions import Fraction
from itertools import product
from typing import NamedTuple

import numpy as np

from .cyclotomic import CycloNum
from .padic import INF, Ball, frac_part, valuation_of
from .scalars import is_exact, sadd, seq, sis_zero, smul, to_complex


class Resolution(NamedTuple):
    """Support exponent M (support in p^-M Z_p^n) and constancy exponent N."""

    M: int
    N: int


def psi_exact(x, p):
    """Additive character value as an exact root of unity."""
    f = frac_part(x, p)
    if f == 0:
        return CycloNum.from_rational(1)
    return CycloNum.root(f.denominator, f.numerator)


def psi_complex(x, p):
    f = frac_part(x, p)
    return cmath.exp(2j * cmath.pi * float(f))


class SBFunction:
    """Finite weighted sum of disjoint ball indicators (normalized form)."""

    __slots__ = ("p", "n", "terms")

    def __init__(self, p, n, terms, _normalized=False):
        self.p = p
        self.n = n
        if _normalized:
            self.terms = tuple(terms)
        else:
            self.terms = _normalize_terms(p, n, terms)

    @classmethod
    def zero(cls, p, n):
        return cls(p, n, ())

    @classmethod
    def indicator(cls, ball, coeff=1):
        return cls(ball.p, ball.n, [(ball, coeff)])

    def is_exact(self):
        return all(is_exact(c) for _, c in self.terms)

    def is_zero(self):
        return not self.terms

    def integrate(self):
        """Integral against Haar measure with vol(Z_p^n) = 1."""
        total = Fraction(0)
        for ball, c in self.terms:
            total = sadd(total, smul(c, ball.volume()))
        return total

    def scale(self, c):
        if sis_zero(c):
            return SBFunction.zero(self.p, self.n)
        return SBFunction(
            self.p, self.n, [(b, smul(c, co)) for b, co in self.terms], _normalized=True
        )

    def __add__(self, other):
        self._check(other)
        return SBFunction(self.p, self.n, list(self.terms) + list(other.terms))

    def __sub__(self, other):
        return self + other.scale(-1)

    def _check(self, other):
        if self.p != other.p or self.n != other.n:
            raise ValueError("mixed (p, n) in SBFunction arithmetic")

    def translate(self, a):
        """The function x -> f(x - a)."""
        return SBFunction(
            self.p,
            self.n,
            [
                (Ball(self.p, b.level, [ci + Fraction(ai) for ci, ai in zip(b.center, a)]), c)
                for b, c in self.terms
            ],
        )

    def value_at(self, x):
        for ball, c in self.terms:
            if ball.contains_point(x):
                return c
        return Fraction(0) if self.is_exact() else 0j

    def resolution(self):
        """Smallest (M, N) with support in p^-M Z_p^n, constant on p^N cosets."""
        M, N = 0, 0
        for ball, _ in self.terms:
            N = max(N, ball.level)
            M = max(M, -ball.level)
            for c in ball.center:
                v = valuation_of(c, self.p)
                if v is not INF:
                    M = max(M, -int(v))
        return Resolution(M, N)

    def compact(self):
        """Canonical minimal form: merge full equal-coefficient sibling sets."""
        store = {b: c for b, c in self.terms}
        pn = self.p**self.n
        changed = True
        while changed:
            changed = False
            by_parent = {}
            for ball in store:
                by_parent.setdefault(ball.reduce_to_level(ball.level - 1), []).append(ball)
            for parent, kids in by_parent.items():
                if len(kids) == pn and all(k.level == parent.level + 1 for k in kids):
                    c0 = store[kids[0]]
                    if all(seq(store[k], c0) for k in kids[1:]):
                        for k in kids:
                            del store[k]
                        store[parent] = c0
                        changed = True
        return SBFunction(self.p, self.n, sorted(store.items(), key=lambda t: t[0].key()), _normalized=True)

    def equals(self, other):
        """Equality as functions (independent of the ball decomposition)."""
        self._check(other)
        return (self - other).is_zero()

    def __repr__(self):
        return "SBFunction(p=%d, n=%d, %d balls)" % (self.p, self.n, len(self.terms))


def _normalize_terms(p, n, raw):
    """Split overlaps to a disjoint refinement, merge equal balls, drop zeros.

    Balls are inserted coarsest-first, so a new ball can meet only equal or
    coarser stored balls (splitting an ancestor never refines below the
    current level); no stored ball is ever strictly inside an incoming one.
    """
    pending = []
    for ball, coeff in raw:
        if ball.p != p or ball.n != n:
            raise ValueError("ball does not match the function's (p, n)")
        pending.append((ball, coeff))
    pending.sort(key=lambda t: t[0].level)

    store = {}
    levels = set()
    for ball, coeff in pending:
        while True:
            if ball in store:
                s = sadd(store[ball], coeff)
                store[ball] = s
                break
            anc = None
            for e in sorted(lv for lv in levels if lv < ball.level):
                cand = ball.reduce_to_level(e)
                if cand in store:
                    anc = cand
                    break
            if anc is None:
                store[ball] = coeff
                levels.add(ball.level)
                break
            c = store.pop(anc)
            for child in anc.subdivide():
                prev = store.get(child)
                store[child] = c if prev is None else sadd(prev, c)
            levels.add(anc.level + 1)
    dead = [b for b, c in store.items() if sis_zero(c)]
    for b in dead:
        del store[b]
    return tuple(sorted(store.items(), key=lambda t: t[0].key()))


def normalize(p, n, raw_terms):
    return SBFunction(p, n, raw_terms)


def _psi_constancy_level(vec, p):
    """Smallest m with x -> psi([vec, x]) constant on p^m Z_p^n cosets; None if constant 1."""
    m = None
    for c in vec:
        v = valuation_of(c, p)
        if v is not INF:
            m = max(m, -int(v)) if m is not None else -int(v)
    return m


def fourier(phi, sign=-1):
    """Per-ball Fourier transform; sign -1 forward, +1 inverse.

    F(1_{a+p^e Z^n})(xi) = p^{-en} psi(sign [a, xi]) 1_{p^{-e} Z^n}(xi),
    expanded into the cosets on which the phase factor is constant.
    """
    p, n = phi.p, phi.n
    exact = phi.is_exact()
    psi = (lambda x: psi_exact(x, p)) if exact else (lambda x: psi_complex(x, p))
    out = []
    for ball, c in phi.terms:
        e = ball.level
        a = ball.center
        base = smul(c, ball.volume())
        m = _psi_constancy_level(a, p)
        s = -e
        if m is None or m <= s:
            out.append((Ball(p, s, (0,) * n), base))
            continue
        count = p ** (m - s)
        step = Fraction(p) ** s
        for digits in product(range(count), repeat=n):
            center = tuple(d * step for d in digits)
            phase = sum((ai * xi for ai, xi in zip(a, center)), Fraction(0))
            out.append((Ball(p, m, center), smul(base, psi(sign * phase))))
    return SBFunction(p, n, out).compact()


def inverse_fourier(phi):
    return fourier(phi, sign=+1)


def modulate(phi, x, sign=+1):
    """Multiply by the character xi -> psi(sign [x, xi]) (still Schwartz-Bruhat)."""
    p, n = phi.p, phi.n
    exact = phi.is_exact() and all(isinstance(c, (int, Fraction)) for c in x)
    psi = (lambda y: psi_exact(y, p)) if exact else (lambda y: psi_complex(y, p))
    x = [Fraction(c) for c in x]
    m = _psi_constancy_level(x, p)
    out = []
    for ball, c in phi.terms:
        if m is None or ball.level >= m:
            phase = sum((xi * ci for xi, ci in zip(x, ball.center)), Fraction(0))
            out.append((ball, smul(c, psi(sign * phase))))
        else:
            stack = [ball]
            while stack:
                b = stack.pop()
                if b.level >= m:
                    phase = sum((xi * ci for xi, ci in zip(x, b.center)), Fraction(0))
                    out.append((b, smul(c, psi(sign * phase))))
                else:
                    stack.extend(b.subdivide())
    return SBFunction(p, n, out, _normalized=False)


class GridFunction:
    """Dense complex samples of a test function on (Z/p^(M+N))^n.

    Index k along an axis represents the coordinate p^-M * k; cells are
    cosets of p^N Z_p^n.
    """

    __slots__ = ("p", "n", "res", "values")

    def __init__(self, p, n, res, values):
        self.p = p
        self.n = n
        self.res = Resolution(*res)
        P = p ** (self.res.M + self.res.N)
        values = np.asarray(values, dtype=complex)
        if values.shape != (P,) * n:
            raise ValueError("grid shape %r does not match resolution" % (values.shape,))
        self.values = values

    def point(self, idx):
        scale = Fraction(self.p) ** (-self.res.M)
        return tuple(Fraction(k) * scale for k in idx)

    def __repr__(self):
        return "GridFunction(p=%d, n=%d, M=%d, N=%d)" % (self.p, self.n, *self.res)


class ResolutionError(ValueError):
    def __init__(self, ball, res):
        self.ball = ball
        self.res = res
        super().__init__("resolution %r too coarse for ball %r" % (tuple(res), ball))


def to_grid(phi, res):
    """Dense sampling; errors if the resolution cannot represent phi exactly."""
    res = Resolution(*res)
    p, n = phi.p, phi.n
    P = p ** (res.M + res.N)
    values = np.zeros((P,) * n, dtype=complex)
    for ball, c in phi.terms:
        if ball.level > res.N or ball.level < -res.M:
            raise ResolutionError(ball, res)
        starts = []
        for a in ball.center:
            ap = a * Fraction(p) ** res.M
            if ap.denominator != 1:
                raise ResolutionError(ball, res)
            starts.append(int(ap))
        step = p ** (res.M + ball.level)
        axes = [range(s % step, P, step) for s in starts]
        values[np.ix_(*axes)] += to_complex(c)
    return GridFunction(p, n, res, values)


def from_grid(grid):
    """Exact inverse of to_grid (complex coefficients, minimal ball form)."""
    p, n, res = grid.p, grid.n, grid.res
    P = p ** (res.M + res.N)
    scale = Fraction(p) ** (-res.M)
    terms = []
    for idx in product(range(P), repeat=n):
        v = grid.values[idx]
        if v != 0:
            center = tuple(Fraction(k) * scale for k in idx)
            terms.append((Ball(p, res.N, center), complex(v)))
    return SBFunction(p, n, terms).compact()


def fourier_grid(grid, sign=-1):
    """Finite-group DFT realization of the transform; resolution (M,N)->(N,M)."""
    p, n, (M, N) = grid.p, grid.n, grid.res
    P = p ** (M + N)
    if sign == -1:
        out = np.fft.fftn(grid.values) * (float(p) ** (-N * n))
    else:
        out = np.fft.ifftn(grid.values) * (float(P) ** n) * (float(p) ** (-N * n))
    return GridFunction(p, n, Resolution(N, M), out)


def random_sbfunction(
    rng,
    p,
    n,
    max_balls=8,
    min_level=-2,
    max_level=4,
    max_den_exp=1,
    coeff_bound=9,
    mean_zero=False,
):
    """Seeded random test function with exact rational coefficients."""
    terms = []
    count = rng.randint(1, max_balls)
    for _ in range(count):
        e = rng.randint(min_level, max_level)
        center = []
        for _ in range(n):
            j = rng.randint(0, max_den_exp)
            span = p ** (max(e, 0) + j) if e + j > 0 else 1
            center.append(Fraction(rng.randrange(max(span, 1)), p**j))
        num = 0
        while num == 0:
            num = rng.randint(-coeff_bound, coeff_bound)
        coeff = Fraction(num, rng.randint(1, coeff_bound))
        terms.append((Ball(p, e, center), coeff))
    phi = SBFunction(p, n, terms)
    if mean_zero and not phi.is_zero():
        total = phi.integrate()
        if total != 0:
            lev = 0
            for ball, _ in phi.terms:
                lev = min(lev, ball.level)
                for c in ball.center:
                    v = valuation_of(c, p)
                    if v is not INF:
                        lev = min(lev, int(v))
            big = Ball(p, lev, (0,) * n)
            phi = phi - SBFunction.indicator(big, total / big.volume())
            assert phi.integrate() == 0
    return phi
