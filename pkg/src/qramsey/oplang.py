"""Parser for operator expressions such as ``(y*pz - z*py)/hbar``.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' natural)?
    base   := atom ('/' divisor)*
    atom   := number | 'i' | 'hbar' | generator | '(' expr ')'

``*`` is the noncommutative Weyl product, so ``px*x`` and ``x*px`` differ.
Divisors must be nonzero scalars of the form ``c * hbar^k``; note that
``a/hbar^2`` therefore means ``(a/hbar)^2``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import OperatorSyntaxError
from .weyl import HBAR, I, OperatorPoly, builtin, mul

GENERATOR_TOKENS = {
    "x": "x", "y": "y", "z": "z",
    "px": "p_x", "py": "p_y", "pz": "p_z",
    "p_x": "p_x", "p_y": "p_y", "p_z": "p_z",
    "lx": "l_x", "ly": "l_y", "lz": "l_z",
    "l_x": "l_x", "l_y": "l_y", "l_z": "l_z",
    "L2": "L2",
}

_TOKEN = re.compile(r"(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S)")


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num", "ident", "op", "end"
    text: str
    col: int


def _tokenize(src: str) -> list[_Tok]:
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        num, ident, op = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(_Tok("num", num, col))
        elif ident is not None:
            tokens.append(_Tok("ident", ident, col))
        elif op in "+-*/^()":
            tokens.append(_Tok("op", op, col))
        elif op == ".":
            raise OperatorSyntaxError("decimal numbers are not allowed; write a ratio like 3/2", col)
        else:
            raise OperatorSyntaxError(f"unexpected character {op!r}", col)
        pos = m.end()
    tokens.append(_Tok("end", "", len(src) + 1))
    return tokens


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.tokens[self.i]

    def _next(self) -> _Tok:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def _at(self, text: str) -> bool:
        return self.tok.kind == "op" and self.tok.text == text

    def parse(self) -> OperatorPoly:
        value = self.expr()
        if self.tok.kind != "end":
            raise OperatorSyntaxError(f"unexpected {self.tok.text!r}", self.tok.col)
        return value

    def expr(self) -> OperatorPoly:
        negate = False
        if self._at("+") or self._at("-"):
            negate = self._next().text == "-"
        value = self.term()
        if negate:
            value = -value
        while self._at("+") or self._at("-"):
            op = self._next().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> OperatorPoly:
        value = self.factor()
        while self._at("*"):
            self._next()
            value = mul(value, self.factor())
        return value

    def factor(self) -> OperatorPoly:
        value = self.base()
        if self._at("^"):
            self._next()
            tok = self.tok
            if tok.kind != "num":
                raise OperatorSyntaxError("exponent must be a natural number", tok.col)
            self._next()
            value = value ** int(tok.text)
        return value

    def base(self) -> OperatorPoly:
        value = self.atom()
        while self._at("/"):
            slash = self._next()
            divisor = self.atom()
            scalar = divisor.scalar_value()
            if scalar is not None and not scalar:
                raise OperatorSyntaxError("division by zero", slash.col + 1)
            if scalar is None or len(scalar.terms) != 1:
                raise OperatorSyntaxError("division by a non-scalar", slash.col + 1)
            value = value * scalar.inverse()
        return value

    def atom(self) -> OperatorPoly:
        tok = self.tok
        if tok.kind == "num":
            self._next()
            return OperatorPoly.constant(int(tok.text))
        if tok.kind == "ident":
            self._next()
            if tok.text == "i":
                return OperatorPoly.constant(I)
            if tok.text == "hbar":
                return OperatorPoly.constant(HBAR)
            if tok.text in GENERATOR_TOKENS:
                return builtin(GENERATOR_TOKENS[tok.text])
            raise OperatorSyntaxError(f"unknown identifier {tok.text!r}", tok.col)
        if self._at("("):
            self._next()
            value = self.expr()
            if not self._at(")"):
                raise OperatorSyntaxError("expected ')'", self.tok.col)
            self._next()
            return value
        if tok.kind == "end":
            raise OperatorSyntaxError("unexpected end of expression", tok.col)
        raise OperatorSyntaxError(f"unexpected {tok.text!r}", tok.col)


def parse_operator(src: str) -> OperatorPoly:
    """Parse ``src`` into a normal-ordered :class:`OperatorPoly`."""
    if not src or not src.strip():
        raise OperatorSyntaxError("empty expression", 1)
    return _Parser(src).parse()


def format_operator(poly: OperatorPoly) -> str:
    """Text that :func:`parse_operator` maps back to ``poly``."""
    return str(poly)

