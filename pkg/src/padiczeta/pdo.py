"""Pseudo-differential operators with symbol chi(ac f) |f|^beta.

Application is Fourier transform, multiplication by the symbol, inverse
transform.  On each Fourier-side ball the symbol is either certified
locally constant (exact multiplication) or, after depth-limited
refinement, replaced by its exact ball average taken from the zeta engine
at s = beta; the L2 error bound accounts for the certified oscillation on
every averaged ball.  The image of a test function need not be a test
function when the symbol vanishes on the Fourier support, which is exactly
the case the averaging fallback handles.
"""

import cmath
import math
from fractions import Fraction
from typing import NamedTuple

from .cyclotomic import RadicalNum
from .padic import angular_component
from .polynomial import Polynomial
from .scalars import is_exact, smul, to_complex
from .schwartz import SBFunction, fourier, inverse_fourier
from .zeta import certify_unit_ball, sup_abs_bound, zeta_ball


class SymbolSpec:
    """Polynomial f, exponent beta with Re(beta) > 0, optional character."""

    __slots__ = ("f", "beta", "chi")

    def __init__(self, f, beta, chi=None):
        if f.is_zero():
            raise ValueError("symbol polynomial must be nonzero")
        if isinstance(beta, (int, Fraction)):
            if beta <= 0:
                raise ValueError("Re(beta) must be positive")
        elif complex(beta).real <= 0:
            raise ValueError("Re(beta) must be positive")
        self.f = f
        self.beta = beta
        self.chi = chi if (chi is not None and not chi.is_trivial()) else None

    def beta_is_exact(self):
        return isinstance(self.beta, (int, Fraction))

    def multiplier(self, v, unit, p, exact):
        """Symbol value chi(ac) |y|^beta for y with valuation v and unit part."""
        if exact and self.beta_is_exact():
            q = -Fraction(v) * Fraction(self.beta)
            mult = Fraction(p) ** q if q.denominator == 1 else RadicalNum.from_power(p, q)
            if self.chi is not None:
                mult = smul(self.chi.value(unit), mult)
            return mult
        mult = cmath.exp(-v * complex(self.beta) * math.log(p))
        if self.chi is not None:
            mult *= self.chi.value_complex(unit)
        return mult

    def __repr__(self):
        return "SymbolSpec(f=%r, beta=%s, chi=%r)" % (self.f, self.beta, self.chi)


class ApplyReport(NamedTuple):
    result: SBFunction
    exact: bool
    l2_error_bound: float
    uncertified: tuple


def apply_operator(sym, phi, depth, memo=None):
    """Apply the operator to a test function; see the module docstring."""
    if phi.is_zero():
        return ApplyReport(phi, True, 0.0, ())
    p, n = phi.p, phi.n
    if sym.f.n != n:
        raise ValueError("symbol arity does not match the function dimension")
    if memo is None:
        memo = {}
    fhat = fourier(phi)
    exact_coeffs = fhat.is_exact()
    out = []
    err_box = [0.0]
    uncertified = []

    def walk(ball, coeff, rem, cap):
        cert = certify_unit_ball(sym.f, ball, need_angular=sym.chi is not None)
        if cert is not None:
            unit = (
                angular_component(sym.f.evaluate(ball.center), p, 1)
                if sym.chi is not None
                else 1
            )
            mult = sym.multiplier(cert.v, unit, p, exact_coeffs)
            out.append((ball, smul(coeff, mult)))
            return
        bound = sup_abs_bound(sym.f, ball)
        if cap is not None and cap < bound:
            bound = cap
        if rem > 0:
            for child in ball.subdivide():
                walk(child, coeff, rem - 1, bound)
            return
        # depth exhausted: exact ball average of the symbol, oscillation bound
        zr = zeta_ball(sym.f, sym.chi, ball, depth, memo)
        beta_c = Fraction(sym.beta) if isinstance(sym.beta, (int, Fraction)) else complex(sym.beta)
        avg = zr.value.evaluate(beta_c) / complex(ball.volume())
        out.append((ball, smul(to_complex(coeff), avg)))
        osc = float(bound) ** complex(sym.beta).real
        if sym.chi is not None:
            osc *= 2.0
        err_box[0] += abs(to_complex(coeff)) ** 2 * osc**2 * float(ball.volume())
        uncertified.append(ball)

    for ball, coeff in fhat.terms:
        walk(ball, coeff, depth, None)
    err_sq = err_box[0]
    multiplied = SBFunction(p, n, out)
    result = inverse_fourier(multiplied)
    exact = not uncertified
    return ApplyReport(result, exact, math.sqrt(err_sq), tuple(uncertified))


def apply_vladimirov(alpha, phi, depth, memo=None):
    """Fractional-derivative operator with symbol |xi|^alpha on Q_p.

    Exact whenever the Fourier transform of phi vanishes near 0; otherwise
    the depth-limited tail around 0 is averaged and the report carries the
    resulting bound (of order p^(-depth * alpha) * sup |F phi|).
    """
    if float(alpha) <= 0:
        raise ValueError("alpha must be positive")
    if phi.n != 1:
        raise ValueError("Vladimirov operator is one-dimensional")
    sym = SymbolSpec(Polynomial.variable(0, 1), alpha)
    return apply_operator(sym, phi, depth, memo=memo)
