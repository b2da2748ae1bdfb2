"""Recursive-descent parser for field and candidate expressions.

Grammar (no implicit multiplication):

    expr     := term (('+' | '-') term)*          left associative
    term     := signed (('*' | '/') signed)*      left associative
    signed   := '-' signed | power
    power    := atom ('^' exponent)?              '^' binds above unary '-'
    exponent := INTEGER ('^' exponent)?           right associative
    atom     := INTEGER | NAME | '(' expr ')'

Exponents must be nonnegative integer literals, so ``x^-1`` is a parse
error.  ``/`` builds rational functions; integer quotients like ``1/2``
therefore come out as exact rational constants.  Every name must be listed
either as a variable or as a parameter.
"""

from __future__ import annotations

from typing import Iterable, List, NamedTuple, Optional, Tuple

from .algebra import RationalFunction
from .errors import ParseError, UnknownIdentifier

__all__ = ["parse_expression"]


class _Token(NamedTuple):
    kind: str  # "int" | "name" | "op" | "end"
    text: str
    line: int
    col: int


_OPS = set("+-*/^()")


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            col += 1
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            tokens.append(_Token("int", text[start:i], line, col))
            col += i - start
            continue
        if ch.isalpha() or ch == "_":
            start = i
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
            tokens.append(_Token("name", text[start:i], line, col))
            col += i - start
            continue
        if ch in _OPS:
            tokens.append(_Token("op", ch, line, col))
            col += 1
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line=line, col=col)
    tokens.append(_Token("end", "", line, col))
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], names: dict):
        self.tokens = tokens
        self.pos = 0
        self.names = names

    @property
    def current(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> None:
        tok = self.current
        raise ParseError(message, line=tok.line, col=tok.col)

    def match_op(self, *ops: str) -> Optional[str]:
        tok = self.current
        if tok.kind == "op" and tok.text in ops:
            self.advance()
            return tok.text
        return None

    # grammar rules --------------------------------------------------------

    def expr(self) -> RationalFunction:
        value = self.term()
        while True:
            op = self.match_op("+", "-")
            if op is None:
                return value
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs

    def term(self) -> RationalFunction:
        value = self.signed()
        while True:
            op = self.match_op("*", "/")
            if op is None:
                return value
            rhs = self.signed()
            value = value * rhs if op == "*" else value / rhs

    def signed(self) -> RationalFunction:
        if self.match_op("-"):
            return -self.signed()
        return self.power()

    def power(self) -> RationalFunction:
        base = self.atom()
        if self.match_op("^"):
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        tok = self.current
        if tok.kind != "int":
            self.fail("exponent must be a nonnegative integer")
        self.advance()
        value = int(tok.text)
        if self.match_op("^"):
            value = value ** self.exponent()
        return value

    def atom(self) -> RationalFunction:
        tok = self.current
        if tok.kind == "int":
            self.advance()
            return RationalFunction.constant(int(tok.text))
        if tok.kind == "name":
            self.advance()
            kind = self.names.get(tok.text)
            if kind is None:
                raise UnknownIdentifier(
                    f"unknown identifier {tok.text!r} at line {tok.line}, "
                    f"column {tok.col}; known variables "
                    f"{[n for n, k in self.names.items() if k == 'var']}, "
                    f"parameters "
                    f"{[n for n, k in self.names.items() if k == 'param']}")
            return RationalFunction.variable(tok.text)
        if tok.kind == "op" and tok.text == "(":
            self.advance()
            value = self.expr()
            if not self.match_op(")"):
                self.fail("expected ')'")
            return value
        self.fail(f"expected a number, name, or '(', got "
                  f"{tok.text!r}" if tok.text else
                  "unexpected end of expression")
        raise AssertionError("unreachable")


def parse_expression(text: str, vars: Iterable[str] = ("x", "y"),
                     params: Iterable[str] = ()) -> RationalFunction:
    """Parse ``text`` into an exact rational function.

    ``vars`` and ``params`` together list the identifiers the expression
    may mention (the split only affects the error message).  Unknown names
    raise UnknownIdentifier; grammar violations raise ParseError with the
    line and column of the offending token.
    """
    names = {n: "var" for n in vars}
    names.update({n: "param" for n in params})
    tokens = _tokenize(text)
    parser = _Parser(tokens, names)
    value = parser.expr()
    if parser.current.kind != "end":
        parser.fail(f"unexpected {parser.current.text!r} after expression")
    return value
