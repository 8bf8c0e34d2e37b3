"""Coercion helpers for the mixed scalar kinds used as coefficients.

Coefficients throughout the package are one of: int, Fraction, CycloNum,
RadicalNum, or (on the float backend) complex/float.  Exact kinds combine
exactly; as soon as an inexact operand appears the result is complex.
"""

from fractions import Fraction

from .cyclotomic import CycloNum, RadicalNum

EXACT_KINDS = (int, Fraction, CycloNum, RadicalNum)


def is_exact(x):
    return isinstance(x, EXACT_KINDS)


def to_complex(x):
    if isinstance(x, (CycloNum, RadicalNum)):
        return x.to_complex()
    return complex(x)


def _rank(x):
    if isinstance(x, (int, Fraction)):
        return 0
    if isinstance(x, CycloNum):
        return 1
    if isinstance(x, RadicalNum):
        return 2
    return 3


def _pair(x, y):
    """Promote to a common kind; returns (x, y, exact_flag)."""
    rx, ry = _rank(x), _rank(y)
    if rx == 3 or ry == 3:
        return to_complex(x), to_complex(y), False
    if rx < ry:
        x, y, rx, ry = y, x, ry, rx
        swapped = True
    else:
        swapped = False
    if _rank(x) == 2 and _rank(y) < 2:
        y = RadicalNum.from_scalar(x.p, y)
    out = (y, x) if swapped else (x, y)
    return out[0], out[1], True


def sadd(x, y):
    a, b, _ = _pair(x, y)
    return a + b


def ssub(x, y):
    a, b, _ = _pair(x, y)
    return a - b


def smul(x, y):
    a, b, _ = _pair(x, y)
    return a * b


def sneg(x):
    return -x if not isinstance(x, complex) else -x


def sdiv_exact(x, q):
    """Divide a scalar by a nonzero Fraction/int (exact unless x is inexact)."""
    q = Fraction(q)
    if isinstance(x, (int, Fraction)):
        return Fraction(x) / q
    if isinstance(x, (CycloNum, RadicalNum)):
        return x * (Fraction(1) / q)
    return x / float(q)


def sis_zero(x):
    if isinstance(x, (CycloNum, RadicalNum)):
        return x.is_zero()
    return x == 0


def seq(x, y):
    a, b, exact = _pair(x, y)
    if exact:
        return a == b
    return a == b


def sconj(x):
    if isinstance(x, (CycloNum, RadicalNum)):
        return x.conj()
    if isinstance(x, complex):
        return x.conjugate()
    return x


def sabs2(x):
    """x * conj(x); exact for exact kinds."""
    return smul(x, sconj(x))


def as_rational(x):
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (CycloNum, RadicalNum)):
        return x.as_rational()
    return None
