"""Parser for Weyl-algebra expressions such as ``x*dx^2 - y*dy^2 + dx - dy``.

Products are evaluated in the algebra, left to right, so ``dx*x`` parses to
``x*dx + 1``.  Division is allowed only by expressions free of derivatives
and means right multiplication by the inverse.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from .arith import RationalFunction
from .weyl import RationalWeylElement, WeylContext, WeylElement


class ParseError(ValueError):
    def __init__(self, message: str, position: int = None, text: str = None):
        self.position = position
        self.text = text
        if position is not None:
            message = f"{message} at position {position}"
            if text is not None:
                message += f"\n  {text}\n  {' ' * position}^"
        super().__init__(message)


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op", "end"
    value: str
    pos: int


def tokenize(s: str) -> List[Token]:
    tokens = []
    pos = 0
    while pos < len(s):
        if s[pos:].strip() == "":
            break
        m = _TOKEN.match(s, pos)
        if not m:
            ws = len(s[pos:]) - len(s[pos:].lstrip())
            raise ParseError(f"unexpected character {s[pos + ws]!r}", pos + ws, s)
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(Token("int", m.group(1), start))
        elif m.group(2):
            tokens.append(Token("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(Token("op", op, start))
        pos = m.end()
    tokens.append(Token("end", "", len(s)))
    return tokens


class _Parser:
    def __init__(self, text: str, ctx: WeylContext):
        self.text = text
        self.ctx = ctx
        self.tokens = tokenize(text)
        self.i = 0
        self.names = {}
        for k, v in enumerate(ctx.variables):
            self.names[v] = RationalWeylElement.from_coefficient(ctx, RationalFunction.var(ctx.table, k))
        for p in ctx.params:
            self.names[p] = RationalWeylElement.from_coefficient(ctx, ctx.param(p))
        for k, d in enumerate(ctx.dnames):
            self.names[d] = ctx.d(k).to_rational()

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def error(self, msg: str, tok: Token = None):
        tok = tok or self.peek()
        raise ParseError(msg, tok.pos, self.text)

    def parse(self) -> RationalWeylElement:
        if self.peek().kind == "end":
            self.error("empty expression")
        v = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().value!r}")
        return v

    def expr(self):
        v = self.term()
        while self.peek().kind == "op" and self.peek().value in "+-":
            op = self.take().value
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek().kind == "op" and self.peek().value in "*/":
            op = self.take()
            w = self.unary()
            if op.value == "*":
                v = v * w
            else:
                if any(any(b) for b in w.terms):
                    self.error("division by an expression containing a derivative", op)
                if not w:
                    self.error("division by zero", op)
                v = v * RationalWeylElement.from_coefficient(self.ctx, w.coefficient((0,) * self.ctx.n).inverse())
        return v

    def unary(self):
        if self.peek().kind == "op" and self.peek().value in "+-":
            op = self.take().value
            v = self.unary()
            return -v if op == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek().kind == "op" and self.peek().value == "^":
            self.take()
            tok = self.take()
            if tok.kind != "int":
                self.error("exponent must be a non-negative integer literal", tok)
            base = base ** int(tok.value)
        return base

    def atom(self):
        tok = self.take()
        if tok.kind == "int":
            return RationalWeylElement.from_coefficient(self.ctx, Fraction(int(tok.value)))
        if tok.kind == "name":
            try:
                return self.names[tok.value]
            except KeyError:
                self.error(f"unknown identifier {tok.value!r}", tok)
        if tok.kind == "op" and tok.value == "(":
            v = self.expr()
            close = self.take()
            if close.kind != "op" or close.value != ")":
                self.error("expected ')'", close)
            return v
        if tok.kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected {tok.value!r}", tok)


def parse_rational(s: str, ctx: WeylContext) -> RationalWeylElement:
    """Parse into R_n regardless of the shape of the coefficients."""
    return _Parser(s, ctx).parse()


def parse_expr(s: str, ctx: WeylContext) -> Union[WeylElement, RationalWeylElement]:
    """Parse an operator: a WeylElement when every coefficient is a polynomial,
    otherwise a RationalWeylElement (so ``1/eps*dx`` stays rational)."""
    r = parse_rational(s, ctx)
    return r.to_weyl() if all(c.den.is_one() for c in r.terms.values()) else r


def parse_list(s: str, ctx: WeylContext, sep: str = ";") -> List[Union[WeylElement, RationalWeylElement]]:
    parts = [p for p in s.split(sep) if p.strip()]
    if not parts:
        raise ParseError("no expressions given")
    return [parse_expr(p, ctx) for p in parts]


def parse_scalar(s: str, ctx: WeylContext) -> RationalFunction:
    """Parse a rational function of the variables and parameters (no derivatives)."""
    r = parse_rational(s, ctx)
    if any(any(b) for b in r.terms):
        raise ParseError(f"expected a rational function, got an operator: {s!r}")
    return r.coefficient((0,) * ctx.n)


def parse_matrix(s: str, ctx: WeylContext) -> List[List[RationalFunction]]:
    """Rows separated by ';', entries by ','."""
    rows = [r for r in s.split(";") if r.strip()]
    out = [[parse_scalar(e, ctx) for e in r.split(",")] for r in rows]
    if not out or len({len(r) for r in out}) != 1:
        raise ParseError("matrix rows must be nonempty and of equal length")
    return out
