"""Parser for the closed-form function mini-language used on the command line.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := ["+" | "-"] factor ("*" factor)*
    factor := NUMBER | "x" ["^" INT] | ("exp" | "sin" | "cos") "(" ["-"] NUMBER ")"

A term may contain at most one non-numeric factor.  ``exp(b)`` denotes
``exp(b*x)``; ``sin(w)`` and ``cos(w)`` likewise take the angular frequency.
"""
from __future__ import annotations

import re

from .core import ClosedFormFunction
from .errors import ParseError

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<name>[A-Za-z_]+)
  | (?P<op>[-+*^()])
""", re.VERBOSE)

_FUNCS = {
    "exp": ClosedFormFunction.exponential,
    "sin": ClosedFormFunction.sine,
    "cos": ClosedFormFunction.cosine,
}


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos, text)
        if m.lastgroup != "ws":
            tokens.append((m.lastgroup, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.tokens[self.i]

    def fail(self, expected):
        kind, value, pos = self.tok
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {expected}, found {found}", pos, self.text)

    def accept(self, value):
        if self.tok[1] == value and self.tok[0] in ("op", "name"):
            self.i += 1
            return True
        return False

    def expect(self, value):
        if not self.accept(value):
            self.fail(repr(value))

    def number(self):
        sign = -1.0 if self.accept("-") else 1.0
        if self.tok[0] != "number":
            self.fail("a number")
        value = float(self.tok[1])
        self.i += 1
        return sign * value

    def factor(self):
        kind, value, pos = self.tok
        if kind == "number":
            self.i += 1
            return float(value), None
        if kind == "name" and value == "x":
            self.i += 1
            k = 1
            if self.accept("^"):
                kpos = self.tok[2]
                power = self.number()
                if power != int(power) or power < 0:
                    raise ParseError("exponent must be a non-negative integer", kpos, self.text)
                k = int(power)
            return 1.0, ClosedFormFunction.monomial(k)
        if kind == "name" and value in _FUNCS:
            self.i += 1
            self.expect("(")
            arg = self.number()
            self.expect(")")
            return 1.0, _FUNCS[value](arg)
        self.fail("a number, 'x', 'exp', 'sin' or 'cos'")

    def term(self):
        coef = 1.0
        if self.accept("-"):
            coef = -1.0
        else:
            self.accept("+")
        atom = None
        while True:
            pos = self.tok[2]
            c, a = self.factor()
            coef *= c
            if a is not None:
                if atom is not None:
                    raise ParseError("products of two functions are not in the basis", pos, self.text)
                atom = a
            if not self.accept("*"):
                break
        return coef, atom

    def expr(self):
        terms = [self.term()]
        while True:
            if self.accept("+"):
                terms.append(self.term())
            elif self.accept("-"):
                c, a = self.term()
                terms.append((-c, a))
            else:
                break
        if self.tok[0] != "end":
            self.fail("'+', '-', '*' or end of input")
        return terms


def parse_function_spec(text: str) -> ClosedFormFunction:
    terms = _Parser(text).expr()
    if len(terms) == 1:
        coef, atom = terms[0]
        if atom is None:
            return ClosedFormFunction.constant(coef)
        if coef == 1.0:
            return atom
    return ClosedFormFunction.combination(
        (c, ClosedFormFunction.constant(1.0) if a is None else a) for c, a in terms)
