"""Pure-Python histogram recursion; reference semantics for the compiled core.

Given an integer-coefficient polynomial G on Z_p^n (coefficients indexed by
a fixed downward-closed exponent lattice, constant term first), recursively
subdivide the unit ball.  A ball is decided when |G| is provably constant
on it by strict Taylor domination; the scaled representative polynomial
G(a + p^e y) carries the level weights in its own coefficients, so the test
is a pure valuation comparison.  Returns histograms keyed by (valuation,
level) for decided balls and (sup-valuation bound, level) for balls left
undecided at the depth limit.

The compiled twin in _core.pyx implements the same recursion over int64
with an overflow guard; outputs must be identical whenever the guard
admits the input.
"""

import math
from itertools import product

BIGVAL = 1 << 30  # sentinel for v(0)


def lattice_exponents(degs):
    """All multi-indices alpha <= degs componentwise; index 0 is alpha = 0."""
    ranges = [range(d + 1) for d in degs]
    exps = [tuple(reversed(t)) for t in product(*[list(r) for r in reversed(ranges)])]
    # mixed-radix order with the first variable as the fastest digit
    return exps


def build_shift_matrices(p, degs):
    """Integer matrices T_d with (T_d g) = coefficients of y -> G(d + p y).

    One matrix per digit vector d in [0,p)^n, in lexicographic order, acting
    on coefficient vectors over the exponent lattice.
    """
    exps = lattice_exponents(degs)
    index = {a: i for i, a in enumerate(exps)}
    n = len(degs)
    mats = []
    for d in product(range(p), repeat=n):
        mat = [[0] * len(exps) for _ in exps]
        for bi, beta in enumerate(exps):
            for alpha in product(*[range(b + 1) for b in beta]):
                entry = 1
                for i in range(n):
                    entry *= math.comb(beta[i], alpha[i]) * d[i] ** (beta[i] - alpha[i])
                entry *= p ** sum(alpha)
                mat[index[alpha]][bi] += entry
        mats.append(mat)
    return exps, mats


def _val(x, p):
    if x == 0:
        return BIGVAL
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def collect_histogram(p, n, mats, coeffs, depth):
    """Decided/undecided histograms for the unit ball of Z_p^n.

    mats: shift matrices from build_shift_matrices; coeffs: integer
    coefficient vector of G over the same lattice.
    """
    L = len(coeffs)
    decided = {}
    undecided = {}

    def rec(g, e, rem):
        v0 = _val(g[0], p)
        m1 = BIGVAL
        for i in range(1, L):
            if g[i]:
                v = _val(g[i], p)
                if v < m1:
                    m1 = v
        if v0 < BIGVAL and m1 > v0:
            key = (v0, e)
            decided[key] = decided.get(key, 0) + 1
            return
        if rem == 0:
            key = (min(v0, m1), e)
            undecided[key] = undecided.get(key, 0) + 1
            return
        for mat in mats:
            child = [sum(row[j] * g[j] for j in range(L) if g[j]) for row in mat]
            rec(child, e + 1, rem - 1)

    rec(list(coeffs), 0, depth)
    return decided, undecided
