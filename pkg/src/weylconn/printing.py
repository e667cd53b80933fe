"""Deterministic text rendering of polynomials, operators and matrices.

The output is valid parser input: ``parse_expr(format_element(P)) == P``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .arith import Polynomial, RationalFunction

_ATOM = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$|^[0-9]+$")


def _monomial(names: Sequence[str], exp) -> str:
    parts = []
    for name, k in zip(names, exp):
        if k == 1:
            parts.append(name)
        elif k:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def _signed_terms(p: Polynomial) -> List[Tuple[bool, str]]:
    out = []
    for e, c in p.sorted_terms():
        mono = _monomial(p.ring.names, e)
        neg = c < 0
        a = -c if neg else c
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        out.append((neg, body))
    return out


def _join(terms: List[Tuple[bool, str]]) -> str:
    if not terms:
        return "0"
    neg, body = terms[0]
    s = ("-" if neg else "") + body
    for neg, body in terms[1:]:
        s += (" - " if neg else " + ") + body
    return s


def format_polynomial(p: Polynomial) -> str:
    return _join(_signed_terms(p))


def format_rational(r: RationalFunction) -> str:
    """``num`` when the denominator is 1, else ``(num)/(den)`` with parentheses
    dropped around bare names and unsigned integers."""
    num = format_polynomial(r.num)
    if r.den.is_one():
        return num
    den = format_polynomial(r.den)
    if not _ATOM.match(num):
        num = f"({num})"
    if not _ATOM.match(den):
        den = f"({den})"
    return f"{num}/{den}"


def _coefficient(c) -> Tuple[bool, str]:
    """Split a coefficient into (negative, body); body is '' for +-1."""
    if isinstance(c, Fraction) or isinstance(c, int):
        c = Fraction(c)
        neg = c < 0
        a = -c if neg else c
        return neg, "" if a == 1 else str(a)
    if c.den.is_one():
        terms = _signed_terms(c.num)
        if len(terms) == 1:
            neg, body = terms[0]
            return neg, "" if body == "1" else body
        return False, f"({_join(terms)})"
    return False, format_rational(c)


def _term(coef, mono: str) -> Tuple[bool, str]:
    neg, body = _coefficient(coef)
    if body and mono:
        return neg, f"{body}*{mono}"
    return neg, body or mono or "1"


def format_element(p) -> str:
    """Render a WeylElement (expanded, normally ordered) or a
    RationalWeylElement (grouped by derivative monomial), largest term first."""
    from .weyl import WeylElement

    ctx = p.ctx
    if isinstance(p, WeylElement):
        terms = []
        for (a, b), c in p.sorted_terms():
            mono = "*".join(filter(None, [_monomial(ctx.variables, a), _monomial(ctx.dnames, b)]))
            terms.append(_term(c, mono))
        return _join(terms)
    terms = [_term(c, _monomial(ctx.dnames, b)) for b, c in p.sorted_terms()]
    return _join(terms)


def format_matrix(rows: Sequence[Sequence[RationalFunction]]) -> str:
    """Row-major, column-aligned, one ``| ... |`` line per row."""
    cells = [[format_rational(e) for e in row] for row in rows]
    if not cells:
        return "| |"
    widths = [max(len(r[j]) for r in cells) for j in range(len(cells[0]))]
    lines = []
    for r in cells:
        lines.append("| " + " ".join(s.ljust(w) for s, w in zip(r, widths)) + " |")
    return "\n".join(lines)
