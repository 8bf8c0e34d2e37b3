"""Input language for polynomials: x1..xn, + - * / ^, parentheses.

"xi" is an alias for x1 in one dimension.  Division is only defined with a
constant divisor.  parse(format(f)) == f.
"""

import re
from fractions import Fraction

from .polynomial import Polynomial


class ParseError(ValueError):
    def __init__(self, message, position):
        self.position = position
        super().__init__("%s (at offset %d)" % (message, position))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([()+\-*/^]))")


def _tokenize(src):
    tokens = []
    pos = 0
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            stripped = src[pos:].lstrip()
            at = len(src) - len(stripped)
            raise ParseError("unexpected character %r" % stripped[:1], at)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


class _Parser:
    def __init__(self, src, n):
        self.tokens = _tokenize(src)
        self.i = 0
        self.n = n

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.next()
        if kind != "op" or val != op:
            raise ParseError("expected %r" % op, pos)

    def parse(self):
        poly = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ParseError("trailing input", pos)
        return poly

    def expr(self):
        node = self.term()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.next()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self):
        node = self.power()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val in "*/":
                self.next()
                rhs = self.power()
                if val == "*":
                    node = node * rhs
                else:
                    if not rhs.is_constant():
                        raise ParseError("division only by constants", pos)
                    c = rhs.evaluate((0,) * self.n)
                    if c == 0:
                        raise ParseError("division by zero", pos)
                    node = node * (Fraction(1) / c)
            else:
                return node

    def power(self):
        node = self.atom()
        kind, val, pos = self.peek()
        if kind == "op" and val == "^":
            self.next()
            kind2, val2, pos2 = self.next()
            if kind2 != "num":
                raise ParseError("exponent must be a nonnegative integer", pos2)
            out = Polynomial.constant(self.n, 1)
            for _ in range(val2):
                out = out * node
            return out
        return node

    def atom(self):
        kind, val, pos = self.next()
        if kind == "num":
            return Polynomial.constant(self.n, val)
        if kind == "name":
            if val == "xi":
                if self.n != 1:
                    raise ParseError("'xi' is only an alias in one dimension", pos)
                return Polynomial.variable(0, 1)
            m = re.fullmatch(r"x(\d+)", val)
            if not m:
                raise ParseError("unknown identifier %r" % val, pos)
            idx = int(m.group(1))
            if not (1 <= idx <= self.n):
                raise ParseError("variable %r out of range for n=%d" % (val, self.n), pos)
            return Polynomial.variable(idx - 1, self.n)
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect_op(")")
            return node
        if kind == "op" and val == "-":
            return -self.atom_or_power()
        raise ParseError("expected a term", pos)

    def atom_or_power(self):
        return self.power()


def parse_polynomial(src, n):
    """Parse an expression into an exact Polynomial in n variables."""
    if n < 1:
        raise ValueError("dimension must be >= 1")
    return _Parser(src, n).parse()


def format_polynomial(f):
    """Canonical printable form; parse(format(f), f.n) == f."""
    if f.is_zero():
        return "0"
    items = sorted(f.terms.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    parts = []
    for alpha, c in items:
        factors = []
        for i, e in enumerate(alpha):
            if e == 1:
                factors.append("x%d" % (i + 1))
            elif e > 1:
                factors.append("x%d^%d" % (i + 1, e))
        mag = abs(c)
        coeff_str = str(mag)
        if factors and mag == 1:
            body = "*".join(factors)
        elif factors:
            body = coeff_str + "*" + "*".join(factors)
        else:
            body = coeff_str
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)
