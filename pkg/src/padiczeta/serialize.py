"""JSON schemas for balls, test functions, rational functions, and grids.

Exact values travel as strings ("num/den" or "num", base 10); numeric
renders use fixed 17-significant-digit formatting so that identical runs
produce byte-identical artifacts.
"""

from fractions import Fraction

from .cyclotomic import CycloNum, RadicalNum
from .padic import Ball
from .ratfunc import DenFactor, RatFunc
from .schwartz import SBFunction


def fmt_float(x):
    return "%.17g" % float(x)


def rational_to_str(r):
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else "%d/%d" % (r.numerator, r.denominator)


def rational_from_str(s):
    return Fraction(s)


def coeff_to_json(c):
    if isinstance(c, (int, Fraction)):
        return {"re": rational_to_str(c), "im": "0"}
    if isinstance(c, CycloNum):
        r = c.as_rational()
        if r is not None:
            return {"re": rational_to_str(r), "im": "0"}
        return {
            "cyclotomic": {
                "m": c.m,
                "terms": [[j, rational_to_str(v)] for j, v in sorted(c.co.items())],
            }
        }
    if isinstance(c, RadicalNum):
        return {
            "radical": {
                "p": c.p,
                "terms": [
                    [rational_to_str(r), coeff_to_json(v)] for r, v in sorted(c.terms.items())
                ],
            }
        }
    c = complex(c)
    return {"re": fmt_float(c.real), "im": fmt_float(c.imag)}


def coeff_from_json(obj):
    if "cyclotomic" in obj:
        spec = obj["cyclotomic"]
        return CycloNum(spec["m"], {int(j): Fraction(v) for j, v in spec["terms"]})
    re_s, im_s = obj["re"], obj["im"]
    try:
        re_v = Fraction(re_s)
        im_v = Fraction(im_s)
    except ValueError:
        return complex(float(re_s), float(im_s))
    if im_v == 0:
        return re_v
    return complex(float(re_v), float(im_v))


def ball_to_json(ball):
    return {"level": ball.level, "center": [rational_to_str(c) for c in ball.center]}


def ball_from_json(obj, p):
    return Ball(p, obj["level"], [Fraction(c) for c in obj["center"]])


def sbfunction_to_json(phi):
    return {
        "p": phi.p,
        "n": phi.n,
        "terms": [
            {
                "level": ball.level,
                "center": [rational_to_str(c) for c in ball.center],
                "coeff": coeff_to_json(coeff),
            }
            for ball, coeff in phi.terms
        ],
    }


def sbfunction_from_json(obj):
    p, n = obj["p"], obj["n"]
    terms = []
    for t in obj["terms"]:
        ball = Ball(p, t["level"], [Fraction(c) for c in t["center"]])
        terms.append((ball, coeff_from_json(t["coeff"])))
    return SBFunction(p, n, terms)


def _num_coeff_json(c):
    out = coeff_to_json(c)
    if set(out) == {"re", "im"} and out["im"] == "0":
        return out["re"]
    return out


def ratfunc_to_json(r):
    return {
        "p": r.p,
        "num": [[k, _num_coeff_json(c)] for k, c in sorted(r.num.items())],
        "den": [[fac.a, fac.b] for fac in r.den],
    }


def ratfunc_from_json(obj):
    p = obj["p"]
    num = {}
    for k, c in obj["num"]:
        num[int(k)] = Fraction(c) if isinstance(c, str) else coeff_from_json(c)
    den = tuple(DenFactor(int(a), int(b)) for a, b in obj["den"])
    return RatFunc(p, num, den)


def grid_to_json(grid):
    flat = grid.values.reshape(-1)
    return {
        "p": grid.p,
        "n": grid.n,
        "M": grid.res.M,
        "N": grid.res.N,
        "values": [[fmt_float(v.real), fmt_float(v.imag)] for v in flat],
    }
