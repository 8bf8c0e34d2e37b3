"""Truncated numeric integration of Phi |f|^s — the engine-independent oracle.

Decomposes to a fixed depth; balls on which |f| is provably constant
contribute vol * |f(a)|^s exactly, everything else contributes zero to the
value and vol * (certified sup bound)^Re(s) to the error radius.  Valid in
the convergence half-plane Re(s) > 0, where this brackets the true
integral.  No rational-function algebra is used anywhere on this path.

The decomposition is computed once as a valuation histogram and can then
be evaluated at many exponents for free.
"""

import cmath
import math
from fractions import Fraction
from typing import NamedTuple

from . import backend
from .padic import angular_component
from .scalars import to_complex
from .zeta import certify_unit_ball, sup_abs_bound


class Bracket(NamedTuple):
    value: complex
    err: float

    @property
    def width(self):
        return self.err

    def contains(self, z, slack=1e-12):
        return abs(complex(z) - self.value) <= self.err + slack


class OracleError(ValueError):
    pass


def ball_histogram(f, ball, depth, force_fallback=False):
    """Valuation histograms of |f| over one ball.

    Returns (vshift, decided, undecided): decided maps (v, e) to the count
    of level-e subcells (relative to the ball) where |f| = p^-(vshift+v);
    undecided maps certified sup-valuations to counts at the depth limit.
    """
    p = ball.p
    G = f.shift(ball.center).scale_variables(Fraction(p) ** ball.level)
    vshift, _, F = G.integerize(p)
    degs = F.max_degrees()
    exps, mats = backend.build_shift_matrices(p, degs)
    index = {a: i for i, a in enumerate(exps)}
    coeffs = [0] * len(exps)
    for alpha, c in F.terms.items():
        coeffs[index[alpha]] = int(c)
    decided, undecided = backend.collect_histogram(
        p, ball.n, mats, coeffs, depth, force_fallback=force_fallback
    )
    return vshift, decided, undecided


class TruncatedDecomposition:
    """A depth-limited decomposition, reusable across exponents."""

    def __init__(self, p, n, terms, twisted_terms=None):
        self.p = p
        self.n = n
        self.terms = terms  # (coeff, ball_volume_fraction, vshift, decided, undecided)
        self.twisted_terms = twisted_terms

    def evaluate(self, s0):
        s0c = complex(s0)
        if s0c.real <= 0:
            raise OracleError("oracle valid only in the convergence half-plane")
        lnp = math.log(self.p)
        value = 0j
        err = 0.0
        for coeff, vol, vshift, decided, undecided in self.terms:
            cc = to_complex(coeff)
            volf = float(vol)
            acc = 0j
            for (v, e), count in decided.items():
                acc += count * math.exp(-e * self.n * lnp) * cmath.exp(
                    -(vshift + v) * s0c * lnp
                )
            value += cc * volf * acc
            bad = 0.0
            for (v, e), count in undecided.items():
                bad += count * math.exp(-e * self.n * lnp) * math.exp(
                    -(vshift + v) * s0c.real * lnp
                )
            err += abs(cc) * volf * bad
        if self.twisted_terms is not None:
            for coeff, vol, entries, bad_entries in self.twisted_terms:
                cc = to_complex(coeff)
                acc = 0j
                for chival, v, subvol in entries:
                    acc += chival * float(subvol) * cmath.exp(-v * s0c * lnp)
                value += cc * acc
                bad = 0.0
                for supb, subvol in bad_entries:
                    bad += float(subvol) * float(supb) ** s0c.real
                err += abs(cc) * bad
        return Bracket(value, err)


def decompose(f, phi, depth, chi=None, force_fallback=False):
    """Decompose Phi |f|^s to the given depth, ready for evaluation."""
    if f.is_zero():
        raise OracleError("oracle of zero polynomial")
    twisted = chi is not None and not chi.is_trivial()
    if not twisted:
        terms = []
        for ball, coeff in phi.terms:
            vshift, decided, undecided = ball_histogram(
                f, ball, depth, force_fallback=force_fallback
            )
            terms.append((coeff, ball.volume(), vshift, decided, undecided))
        return TruncatedDecomposition(phi.p, phi.n, terms)
    twisted_terms = []
    for ball, coeff in phi.terms:
        entries = []
        bad = []

        def rec(b, rem):
            cert = certify_unit_ball(f, b, need_angular=True)
            if cert is not None:
                u = angular_component(f.evaluate(b.center), b.p, 1)
                entries.append((chi.value_complex(u), cert.v, b.volume()))
                return
            if rem == 0:
                bad.append((sup_abs_bound(f, b), b.volume()))
                return
            for child in b.subdivide():
                rec(child, rem - 1)

        rec(ball, depth)
        twisted_terms.append((coeff, ball.volume(), entries, bad))
    return TruncatedDecomposition(phi.p, phi.n, [], twisted_terms)


def truncated_zeta(f, phi, s0, depth, chi=None, force_fallback=False):
    """Bracket for the integral of Phi |f|^s at one exponent."""
    return decompose(f, phi, depth, chi=chi, force_fallback=force_fallback).evaluate(s0)
