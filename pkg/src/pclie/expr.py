"""Surface syntax for Lie polynomials.

Grammar (whitespace is ignored)::

    expr     := term (('+' | '-') term)*
    term     := '-' term | [rational '*'] factor | '0'
    factor   := ident | '(' expr ',' expr ')' | '-' factor
    rational := integer ['/' positive-integer]

A lone ``0`` denotes the zero polynomial so that every polynomial can be
printed and read back.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .lie import LiePolynomial, bracket
from .words import Alphabet

__all__ = [
    "ExpressionError",
    "Ident",
    "Bracket",
    "Sum",
    "Scale",
    "Neg",
    "parse_expression",
    "lower",
    "format_polynomial",
]


class ExpressionError(ValueError):
    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Bracket:
    left: object
    right: object


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Scale:
    coef: Fraction
    expr: object


@dataclass(frozen=True)
class Neg:
    expr: object


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(\d+)|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None:
            break  # trailing whitespace
        kind = ("ident", "int", "sym")[m.lastindex - 1]
        value = m.group(m.lastindex)
        if kind == "sym" and value not in "(),+-*/":
            raise ExpressionError(f"unexpected character {value!r}", m.start(m.lastindex))
        tokens.append((kind, value, m.start(m.lastindex)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, alphabet):
        self.tokens = _tokenize(text)
        self.i = 0
        self.alphabet = alphabet

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, v, pos = self.take()
        if kind != "sym" or v != value:
            raise ExpressionError(f"expected {value!r}", pos)

    def expr(self):
        terms = [self.term()]
        while self.peek()[:2] in (("sym", "+"), ("sym", "-")):
            op = self.take()[1]
            t = self.term()
            terms.append(t if op == "+" else Neg(t))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        kind, value, pos = self.peek()
        if kind == "sym" and value == "-":
            self.take()
            return Neg(self.term())
        if kind == "int":
            coef = self.rational()
            if self.peek()[:2] == ("sym", "*"):
                self.take()
                return Scale(coef, self.factor())
            if coef == 0:
                return Sum(())
            raise ExpressionError("expected '*'", self.peek()[2])
        return self.factor()

    def rational(self):
        _, num, _ = self.take()
        if self.peek()[:2] == ("sym", "/"):
            self.take()
            kind, den, pos = self.take()
            if kind != "int":
                raise ExpressionError("expected denominator", pos)
            if int(den) == 0:
                raise ExpressionError("zero denominator", pos)
            return Fraction(int(num), int(den))
        return Fraction(int(num))

    def factor(self):
        kind, value, pos = self.take()
        if kind == "ident":
            if value not in self.alphabet:
                raise ExpressionError(f"unknown identifier {value!r}", pos)
            return Ident(value)
        if kind == "sym" and value == "(":
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect(")")
            return Bracket(left, right)
        if kind == "sym" and value == "-":
            return Neg(self.factor())
        what = "end of input" if kind == "end" else repr(value)
        raise ExpressionError(f"unexpected {what}", pos)


def parse_expression(text: str, alphabet: Alphabet):
    p = _Parser(text, alphabet)
    node = p.expr()
    kind, value, pos = p.peek()
    if kind != "end":
        raise ExpressionError(f"unexpected {value!r}", pos)
    return node


def lower(node, alphabet: Alphabet) -> LiePolynomial:
    """Evaluate the AST in the Lyndon-Shirshov basis."""
    if isinstance(node, Ident):
        return LiePolynomial.basis((alphabet.index(node.name),))
    if isinstance(node, Bracket):
        return bracket(lower(node.left, alphabet), lower(node.right, alphabet))
    if isinstance(node, Sum):
        out = LiePolynomial()
        for t in node.terms:
            out = out + lower(t, alphabet)
        return out
    if isinstance(node, Scale):
        return lower(node.expr, alphabet) * node.coef
    if isinstance(node, Neg):
        return -lower(node.expr, alphabet)
    raise TypeError(f"not an expression node: {node!r}")


def _format_coef(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def format_polynomial(p: LiePolynomial, alphabet: Alphabet) -> str:
    """Deglex-descending text form, e.g. ``2*(x3,x1) - 1/3*x1``."""
    if not p:
        return "0"
    parts = []
    for t, c in p.nword_terms():
        body = alphabet.format_nword(t)
        mag = abs(c)
        text = body if mag == 1 else f"{_format_coef(mag)}*{body}"
        if not parts:
            parts.append(f"-{text}" if c < 0 else text)
        else:
            parts.append(f"- {text}" if c < 0 else f"+ {text}")
    return " ".join(parts)
