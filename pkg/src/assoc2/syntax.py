"""Text syntax shared by the CLI, reports and tests.

Grammar (whitespace insignificant)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' INT)?
    atom    := NUMBER ('/' NUMBER)? | NAME | basis | '(' expr ')'
    basis   := ('phi'|'psi') '[' DIGITS? '->' DIGIT ']'

``phi`` and ``psi`` denote the same basis map; ``psi`` is printed for odd
terms. NAME is an identifier (``t``, ``t1``, ``a_1_2``) naming a polynomial
variable. A product may contain at most one basis factor.

Examples: ``psi[22->2] + psi[11->1]``, ``t*psi[11->1]``, ``-1/2*phi[->2]``,
``(t1 + 1)*psi[12->1]``, ``t1*t2 + 3/4*t1 - 1``.
"""
from __future__ import annotations

import re
from fractions import Fraction

from .coderivation import ODD_PLANE, BasisCoderivation, Coderivation, GradedSpace
from .scalar import Poly


class ParseError(ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(?:(?P<basis>(?:phi|psi)\[\s*(?P<inp>\d*)\s*->\s*(?P<out>\d+)\s*\])"
    r"|(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*/^()]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character at position {pos}: {text[pos:pos + 10]!r}")
        if m.group("basis"):
            tokens.append(("basis", (tuple(int(c) for c in m.group("inp")), int(m.group("out")))))
        elif m.group("num"):
            tokens.append(("num", int(m.group("num"))))
        elif m.group("name"):
            tokens.append(("name", m.group("name")))
        else:
            tokens.append(("op", m.group("op")))
        pos = m.end()
        while pos < len(text) and text[pos].isspace():
            pos += 1
    return tokens


class _Parser:
    def __init__(self, text: str, space: GradedSpace):
        self.tokens = _tokenize(text)
        self.i = 0
        self.space = space

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val = self.take()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}, got {val!r}")

    def parse(self):
        if not self.tokens:
            raise ParseError("empty expression")
        value = self.expr()
        if self.i != len(self.tokens):
            raise ParseError(f"trailing input at token {self.peek()[1]!r}")
        return value

    def expr(self):
        sign = 1
        kind, val = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        value = _scale(self.term(), sign)
        while True:
            kind, val = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                rhs = self.term()
                value = _add(value, rhs if val == "+" else _scale(rhs, -1))
            else:
                return value

    def term(self):
        value = self.factor()
        while True:
            kind, val = self.peek()
            if kind == "op" and val == "*":
                self.take()
                value = _mul(value, self.factor())
            else:
                return value

    def factor(self):
        value = self.atom()
        kind, val = self.peek()
        if kind == "op" and val == "^":
            self.take()
            kind, n = self.take()
            if kind != "num":
                raise ParseError("exponent must be a non-negative integer")
            if isinstance(value, Coderivation):
                raise ParseError("cannot raise a coderivation to a power")
            value = value**n
        return value

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            k2, v2 = self.peek()
            if k2 == "op" and v2 == "/":
                self.take()
                k3, den = self.take()
                if k3 != "num":
                    raise ParseError("expected an integer denominator")
                if den == 0:
                    raise ParseError("zero denominator")
                return Poly.const(Fraction(val, den))
            return Poly.const(val)
        if kind == "name":
            return Poly.var(val)
        if kind == "basis":
            inputs, out = val
            try:
                return Coderivation(self.space, {BasisCoderivation(inputs, out): 1})
            except ValueError as exc:
                raise ParseError(str(exc)) from None
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise ParseError(f"unexpected token {val!r}")


def _scale(x, s):
    return x if s == 1 else (-x)


def _add(a, b):
    if isinstance(a, Coderivation) != isinstance(b, Coderivation):
        if isinstance(a, Poly) and a.is_zero():
            return b
        if isinstance(b, Poly) and b.is_zero():
            return a
        raise ParseError("cannot add a scalar to a coderivation")
    return a + b


def _mul(a, b):
    if isinstance(a, Coderivation) and isinstance(b, Coderivation):
        raise ParseError("a product may contain only one basis coderivation")
    return a * b


def _simplify_coefficient(c):
    if isinstance(c, Poly) and c.is_constant():
        return c.constant_value()
    return c


def parse_polynomial(text: str) -> Poly:
    value = _Parser(text, ODD_PLANE).parse()
    if isinstance(value, Coderivation):
        raise ParseError("expected a polynomial, found a coderivation")
    return value


def parse_coderivation(text: str, space: GradedSpace = ODD_PLANE) -> Coderivation:
    value = _Parser(text, space).parse()
    if isinstance(value, Poly):
        if value.is_zero():
            return Coderivation.zero(space)
        raise ParseError("expected a coderivation, found a scalar expression")
    return value.map_coefficients(_simplify_coefficient)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not an exact rational: {text!r}") from exc


def format_coefficient(c) -> tuple[int, str]:
    """Return (sign, body) where body is empty for a unit coefficient."""
    if isinstance(c, Poly):
        if c.is_constant():
            c = c.constant_value()
        else:
            terms = c.sorted_terms()
            if len(terms) == 1:
                m, a = terms[0]
                sign = -1 if a < 0 else 1
                body = str(m) if abs(a) == 1 else f"{abs(a)}*{m}"
                return sign, body
            return 1, f"({c})"
    c = Fraction(c)
    sign = -1 if c < 0 else 1
    a = abs(c)
    return sign, "" if a == 1 else str(a)


def format_basis(b: BasisCoderivation, space: GradedSpace) -> str:
    name = "psi" if b.parity(space) else "phi"
    return f"{name}[{''.join(map(str, b.inputs))}->{b.output}]"


def format_coderivation(f: Coderivation) -> str:
    if f.is_zero():
        return "0"
    parts = []
    for i, (b, c) in enumerate(f.items()):
        sign, body = format_coefficient(c)
        text = format_basis(b, f.space) if not body else f"{body}*{format_basis(b, f.space)}"
        if i == 0:
            parts.append(text if sign > 0 else f"-{text}")
        else:
            parts.append(f" {'+' if sign > 0 else '-'} {text}")
    return "".join(parts)
