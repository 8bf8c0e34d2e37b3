"""Certified computation of Z(s, Phi) = integral of Phi |f|^s as a RatFunc.

The engine recursively decomposes balls and closes each branch with one of
three exact leaf rules, in fixed order:

  unit rule      |f| is constant on the ball (strict ultrametric Taylor
                 domination), contributing a monomial in t;
  smooth zero    a Hensel-type certificate at a simple zero, contributing
                 the geometric factor p^{-en} t^{e+d} (1-p^{-1})/(1-p^{-1}t)
                 (zero when twisted: each radial shell's character sum dies);
  scaling        for homogeneous f on a ball centered at 0, the shell
                 integral divided by (1 - p^{-n} t^D).

A branch that exhausts its depth budget is reported as undecided together
with a certified sup bound on |f|; the returned rational function then
integrates the decided region only.
"""

from fractions import Fraction
from typing import NamedTuple

from .padic import INF, Ball, angular_component, valuation_of
from .ratfunc import RatFunc

# every denominator factor the engine ever emits, for the pole-negativity audit
EMITTED_FACTORS = set()


class UnitCertificate(NamedTuple):
    v: int
    angular_constant: bool


class SmoothZeroCertificate(NamedTuple):
    i: int
    d: int


class ZetaResult(NamedTuple):
    value: RatFunc
    certified: bool
    undecided: tuple  # of (Ball, Fraction sup bound on |f|)


class ZetaError(ValueError):
    pass


def _taylor_data(f, ball):
    """(v0, m1) with v0 = v(f(a)) and m1 = min over alpha != 0 of v(f_alpha(a)) + e|alpha|."""
    hasse = f.hasse_taylor(ball.center)
    zero = (0,) * ball.n
    e = ball.level
    v0 = valuation_of(hasse.get(zero, Fraction(0)), ball.p)
    m1 = INF
    for alpha, c in hasse.items():
        if alpha == zero:
            continue
        m1 = min(m1, valuation_of(c, ball.p) + e * sum(alpha))
    return v0, m1


def sup_abs_bound(f, ball):
    """Certified upper bound for sup |f| over the ball, as an exact Fraction."""
    v0, m1 = _taylor_data(f, ball)
    m = min(v0, m1)
    if m is INF:
        return Fraction(0)
    return Fraction(ball.p) ** (-int(m))


def certify_unit_ball(f, ball, need_angular=False):
    """Certificate that |f| = p^-v on the ball, or None.

    Issued iff the nonconstant Taylor part is strictly dominated:
    max_{alpha != 0} |f_alpha(a)| p^{-e|alpha|} < |f(a)|.  Angular constancy
    (f/f(a) in 1 + pZ_p, so ac(f) mod p is constant) additionally requires
    the max to be <= p^{-1} |f(a)|; over Q_p both bounds are p-powers so the
    conditions coincide, but they are kept separate as stated.
    """
    v0, m1 = _taylor_data(f, ball)
    if v0 is INF:
        return None
    if not (m1 > v0):
        return None
    angular = m1 >= v0 + 1
    if need_angular and not angular:
        return None
    return UnitCertificate(int(v0), angular)


def certify_smooth_zero(f, ball):
    """Hensel-type certificate (i, d) at a simple zero, or None.

    Requires (a) |d_i f| constant = p^-d on the ball and (b) depth:
    v(f(a)) >= e + d with every Taylor term satisfying
    v(f_alpha(a)) + e|alpha| >= e + d.  Under the certificate the ball's
    zeta value is exactly p^{-en} t^{e+d} (1 - p^{-1}) / (1 - p^{-1} t).
    """
    e = ball.level
    hasse = f.hasse_taylor(ball.center)
    zero = (0,) * ball.n
    v0 = valuation_of(hasse.get(zero, Fraction(0)), ball.p)
    for i in range(ball.n):
        di = f.derivative(i)
        d = valuation_of(di.evaluate(ball.center), ball.p)
        if d is INF:
            continue
        dv0, dm1 = _taylor_data(di, ball)
        if not (dm1 > d):
            continue
        target = e + int(d)
        if not (v0 >= target):
            continue
        ok = True
        for alpha, c in hasse.items():
            if alpha == zero:
                continue
            if valuation_of(c, ball.p) + e * sum(alpha) < target:
                ok = False
                break
        if ok:
            return SmoothZeroCertificate(i, int(d))
    return None


def _emit(a, b):
    EMITTED_FACTORS.add((a, b))
    return (a, b)


def zeta_ball(f, chi, ball, depth, memo=None):
    """ZetaResult for the (possibly twisted) zeta integral over one ball."""
    if f.is_zero():
        raise ZetaError("zeta of zero polynomial")
    if f.n != ball.n:
        raise ZetaError("polynomial arity does not match the ball dimension")
    if memo is None:
        memo = {}
    chi_key = None if chi is None or chi.is_trivial() else chi.key()
    twisted = chi_key is not None
    key = (f.key(), chi_key, ball.key(), depth)
    hit = memo.get(key)
    if hit is not None:
        return hit

    p, n, e = ball.p, ball.n, ball.level
    vol = ball.volume()
    result = None

    cert = certify_unit_ball(f, ball, need_angular=twisted)
    if cert is not None:
        if twisted:
            u = angular_component(f.evaluate(ball.center), p, 1)
            coeff = chi.value(u) * vol
        else:
            coeff = vol
        result = ZetaResult(RatFunc(p, {cert.v: coeff}), True, ())

    if result is None:
        sz = certify_smooth_zero(f, ball)
        if sz is not None:
            if twisted:
                result = ZetaResult(RatFunc.zero(p), True, ())
            else:
                num = {e + sz.d: vol * (1 - Fraction(1, p))}
                result = ZetaResult(RatFunc(p, num, (_emit(1, 1),)), True, ())

    if result is None and depth > 0 and ball.is_centered_at_zero():
        D = f.homogeneous_degree()
        if D is not None:
            children = ball.subdivide()
            shell = RatFunc.zero(p)
            all_ok = True
            for child in children:
                if child.is_centered_at_zero():
                    continue
                sub = zeta_ball(f, chi, child, depth - 1, memo)
                if not sub.certified:
                    all_ok = False
                    break
                shell = shell + sub.value
            if all_ok:
                result = ZetaResult(shell.divide_by_factor(*_emit(n, D)), True, ())

    if result is None:
        if depth <= 0:
            result = ZetaResult(RatFunc.zero(p), False, ((ball, sup_abs_bound(f, ball)),))
        else:
            total = RatFunc.zero(p)
            undecided = []
            certified = True
            for child in ball.subdivide():
                sub = zeta_ball(f, chi, child, depth - 1, memo)
                total = total + sub.value
                undecided.extend(sub.undecided)
                certified = certified and sub.certified
            result = ZetaResult(total, certified, tuple(undecided))

    memo[key] = result
    return result


def zeta_of(f, chi, phi, depth, memo=None):
    """Linear extension of zeta_ball to a Schwartz-Bruhat test function."""
    if memo is None:
        memo = {}
    total = RatFunc.zero(phi.p)
    undecided = []
    certified = True
    for ball, coeff in phi.terms:
        sub = zeta_ball(f, chi, ball, depth, memo)
        total = total + sub.value.scale(coeff)
        undecided.extend(sub.undecided)
        certified = certified and sub.certified
    return ZetaResult(total, certified, tuple(undecided))
