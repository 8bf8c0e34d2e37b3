"""Division of distributions and fundamental solutions.

The division functional T pairs a test function with the constant Laurent
coefficient of its zeta value at s = -beta; the fundamental solution E is
its inverse Fourier transform, realized through <E, Phi> = <T, F^-1 Phi>.
Solutions of the symbol equation are synthesized pointwise as
u(x) = <T_xi, g_hat(xi) psi([x, xi])>, with the per-ball Laurent constants
computed once and reused across grid points.

verify_division checks the limit identity behind the division statement:
the zeta value of Phi, read as a function of the shifted variable s' = s +
beta, extends across s' = 0 (every engine denominator factor has a >= 1,
so nothing vanishes at t' = 1) with value exactly equal to the integral of
Phi.  The twisted identity reduces to the same check because the character
and its conjugate cancel off the measure-zero locus f = 0; which side of
the pairing carries the conjugate is a convention exposed as twist_side.
"""

import cmath
from fractions import Fraction
from itertools import product
from typing import NamedTuple

import numpy as np

from .laurent import laurent_expand
from .ratfunc import PoleError
from .scalars import seq, to_complex
from .schwartz import GridFunction, Resolution, fourier, inverse_fourier, psi_complex
from .zeta import zeta_ball, zeta_of


class UncertifiedError(ArithmeticError):
    """Raised when a pairing needs a zeta value the engine could not certify."""

    def __init__(self, undecided):
        self.undecided = tuple(undecided)
        super().__init__(
            "zeta engine left %d ball(s) undecided; raise the depth" % len(self.undecided)
        )


class PairingResult(NamedTuple):
    exact: object  # LambdaPoly on the exact path, else None
    numeric: complex
    pole_order: int
    near_pole: bool


def pair_t(sym, phi, depth, memo=None):
    """<T, Phi>: constant Laurent coefficient of the zeta value at s = -beta."""
    z = zeta_of(sym.f, sym.chi, phi, depth, memo)
    if not z.certified:
        raise UncertifiedError(z.undecided)
    if sym.beta_is_exact() and z.value.is_exact():
        ls = laurent_expand(z.value, Fraction(sym.beta), 1)
        c0 = ls.c(0)
        return PairingResult(c0, c0.render(), ls.pole_order(), ls.pole_order() > 0)
    beta = complex(sym.beta)
    near = False
    try:
        val = z.value.evaluate(-beta)
    except PoleError:
        raise
    for fac in z.value.den:
        if abs(1 - z.value.p ** (-fac.a) * (z.value.p ** beta) ** fac.b) < 1e-6:
            near = True
    return PairingResult(None, val, 0, near)


def pair_e(sym, phi, depth, memo=None):
    """<E, Phi> = <T, F^-1 Phi> for the fundamental solution E."""
    return pair_t(sym, inverse_fourier(phi), depth, memo=memo)


class DivisionFunctional:
    """The distribution T with chi-bar(ac f) |f|^beta T = 1."""

    def __init__(self, sym, depth, memo=None):
        self.sym = sym
        self.depth = depth
        self.memo = {} if memo is None else memo

    def pair(self, phi):
        return pair_t(self.sym, phi, self.depth, self.memo)


class FundamentalSolution:
    """E = F^-1 T, paired through the Fourier transform."""

    def __init__(self, sym, depth, memo=None):
        self.sym = sym
        self.depth = depth
        self.memo = {} if memo is None else memo

    def pair(self, phi):
        return pair_e(self.sym, phi, self.depth, self.memo)

    def solve(self, g, window):
        return solve(self.sym, g, window, self.depth, self.memo)


class SolveResult(NamedTuple):
    grid: GridFunction
    exact: bool
    ball_data: tuple  # (ball, coefficient, T-value) per Fourier-side ball


def solve(sym, g, window, depth, memo=None):
    """Samples of u = E * g on the window grid.

    u(x) = sum_j c_j psi([x, b_j]) T_j over the Fourier support of g, where
    T_j is the constant Laurent coefficient of the j-th ball's zeta value;
    the T_j are computed once and shared by every grid point.
    """
    if memo is None:
        memo = {}
    window = Resolution(*window)
    p, n = g.p, g.n
    ghat = fourier(g)
    if ghat.is_zero():
        P = p ** (window.M + window.N)
        return SolveResult(
            GridFunction(p, n, window, np.zeros((P,) * n, dtype=complex)), True, ()
        )
    # split Fourier-side balls until psi([x, .]) is constant on each of them
    split = []
    for ball, coeff in ghat.terms:
        stack = [ball]
        while stack:
            b = stack.pop()
            if b.level >= window.M:
                split.append((b, coeff))
            else:
                stack.extend(b.subdivide())
    exact = True
    data = []
    for ball, coeff in split:
        zr = zeta_ball(sym.f, sym.chi, ball, depth, memo)
        if not zr.certified:
            raise UncertifiedError(zr.undecided)
        if sym.beta_is_exact() and zr.value.is_exact():
            tval = laurent_expand(zr.value, Fraction(sym.beta), 0).c(0).render()
        else:
            exact = False
            tval = zr.value.evaluate(-complex(sym.beta))
        data.append((ball, coeff, tval))
    if not ghat.is_exact():
        exact = False
    P = p ** (window.M + window.N)
    values = np.zeros((P,) * n, dtype=complex)
    scale = Fraction(p) ** (-window.M)
    for idx in product(range(P), repeat=n):
        x = [Fraction(k) * scale for k in idx]
        acc = 0j
        for ball, coeff, tval in data:
            phase = sum((xi * ci for xi, ci in zip(x, ball.center)), Fraction(0))
            acc += to_complex(coeff) * psi_complex(phase, p) * tval
        values[idx] = acc
    return SolveResult(GridFunction(p, n, window, values), exact, tuple(data))


class DivisionReport(NamedTuple):
    ok: bool
    left_value: object
    right_value: object
    left_numeric: complex
    right_numeric: complex
    pole_order: int
    t_constant: object  # <T, Phi> as a LambdaPoly (None on numeric paths)
    removed_poles: tuple
    twisted_pole_order: object  # None when untwisted


def verify_division(sym, phi, depth, twist_side="left", memo=None):
    """Machine check of the division identity against one test function.

    left: the zeta value of Phi continued to s' = 0 after removing any
    factor vanishing at t' = 1 (none arise from the engine); right: the
    integral of Phi.  Exact equality is required.  For twisted symbols the
    character cancellation makes the same untwisted limit the content of
    the identity; the twisted zeta is still computed and its pole data
    reported.  twist_side picks which of chi / chi-bar builds T.
    """
    if memo is None:
        memo = {}
    z = zeta_of(sym.f, None, phi, depth, memo)
    if not z.certified:
        raise UncertifiedError(z.undecided)
    value = z.value
    removed = []
    for fac in value.den:
        if fac.a == 0:
            reduced = value.reduced()
            removed = [f for f in value.den if f not in reduced.den]
            value = reduced
            break
    left = value.evaluate_exact(0)
    right = phi.integrate()
    ok = bool(seq(left, right))

    pole_order = 0
    t_constant = None
    if sym.beta_is_exact() and z.value.is_exact():
        ls = laurent_expand(z.value, Fraction(sym.beta), 0)
        pole_order = ls.pole_order()
        t_constant = ls.c(0)

    twisted_pole_order = None
    if sym.chi is not None:
        chi = sym.chi if twist_side == "left" else sym.chi.conj()
        z_tw = zeta_of(sym.f, chi, phi, depth, memo)
        if not z_tw.certified:
            raise UncertifiedError(z_tw.undecided)
        if sym.beta_is_exact() and z_tw.value.is_exact():
            twisted_pole_order = laurent_expand(
                z_tw.value, Fraction(sym.beta), 0
            ).pole_order()
        else:
            twisted_pole_order = -1
    return DivisionReport(
        ok,
        left,
        right,
        to_complex(left),
        to_complex(right),
        pole_order,
        t_constant,
        tuple(removed),
        twisted_pole_order,
    )
