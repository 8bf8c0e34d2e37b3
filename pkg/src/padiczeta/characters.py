"""Multiplicative characters of (Z/p)^x of conductor one.

A character of order d | p-1 is pinned down by the image of a fixed
primitive root g0: chi(g0) = zeta_d^k with gcd(k, d) = 1.  Values are
exact d-th roots of unity; chi(0) = 0 is a caller-side convention (the
engine drops such terms rather than evaluating here).
"""

from functools import lru_cache

from .cyclotomic import CycloNum
from .padic import is_prime


@lru_cache(maxsize=None)
def primitive_root(p):
    order = p - 1
    factors = set()
    m = order
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise ArithmeticError("no primitive root mod %d" % p)


class MultCharacter:
    __slots__ = ("p", "order", "image_exp", "_log")

    def __init__(self, p, order, image_exp=1):
        if not is_prime(p):
            raise ValueError("p must be prime")
        if order < 1 or (p - 1) % order != 0:
            raise ValueError("order must divide p - 1")
        import math

        if math.gcd(image_exp % order if order > 1 else 0, order) != 1 and order > 1:
            raise ValueError("image exponent must be coprime to the order")
        self.p = p
        self.order = order
        self.image_exp = image_exp % order if order > 1 else 0
        g = primitive_root(p) if p > 2 else 1
        log = {}
        x = 1
        for j in range(p - 1):
            log[x] = j
            x = x * g % p
        self._log = log

    @classmethod
    def trivial(cls, p):
        return cls(p, 1, 0)

    @classmethod
    def quadratic(cls, p):
        if p == 2:
            raise ValueError("no nontrivial conductor-1 character at p = 2")
        return cls(p, 2, 1)

    def is_trivial(self):
        return self.order == 1

    def key(self):
        return (self.order, self.image_exp)

    def conj(self):
        if self.order == 1:
            return self
        return MultCharacter(self.p, self.order, (-self.image_exp) % self.order)

    def exponent_of(self, u):
        """Exponent j with chi(u) = zeta_d^j, for a unit u mod p."""
        u %= self.p
        if u == 0:
            raise ZeroDivisionError("chi(0) = 0 convention is handled by callers")
        return self._log[u] * self.image_exp % self.order

    def value(self, u):
        """Exact value chi(u) as a CycloNum."""
        return CycloNum.root(self.order, self.exponent_of(u))

    def value_complex(self, u):
        return self.value(u).to_complex()

    def __eq__(self, other):
        return (
            isinstance(other, MultCharacter)
            and (self.p, self.order, self.image_exp)
            == (other.p, other.order, other.image_exp)
        )

    def __hash__(self):
        return hash((self.p, self.order, self.image_exp))

    def __repr__(self):
        return "MultCharacter(p=%d, order=%d, image=%d)" % (
            self.p,
            self.order,
            self.image_exp,
        )
