import sympy
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from weylconn import Polynomial, RationalFunction, RationalWeylElement, VarTable, WeylContext, WeylElement
from weylconn.fixtures import example_two_variables

XY = VarTable.build(["x", "y"])
XYZ = VarTable.build(["x", "y", "z"])

small_int = st.integers(min_value=-3, max_value=3)


def polynomials(ring=XY, max_terms=4, max_deg=2, allow_zero=True):
    n = len(ring)
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    terms = st.dictionaries(exps, small_int, max_size=max_terms)
    poly = terms.map(lambda t: Polynomial(ring, t))
    if not allow_zero:
        poly = poly.filter(bool)
    return poly


def rationals(ring=XY, allow_zero=True):
    return st.builds(
        RationalFunction,
        polynomials(ring, allow_zero=allow_zero, max_terms=3),
        polynomials(ring, allow_zero=False, max_terms=2, max_deg=1),
    )


def weyl_elements(ctx, max_terms=3, max_deg=2, allow_zero=True):
    n = ctx.n
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    mono = st.tuples(exps, exps)
    terms = st.dictionaries(mono, small_int.filter(bool), max_size=max_terms)
    elems = terms.map(lambda t: WeylElement(ctx, {m: Fraction(c) for m, c in t.items()}))
    if not allow_zero:
        elems = elems.filter(bool)
    return elems


def rational_weyl_elements(ctx, max_terms=3, max_deg=2):
    n = ctx.n
    exps = st.tuples(*[st.integers(0, max_deg)] * n)
    return st.dictionaries(exps, rationals(ctx.table), max_size=max_terms).map(
        lambda t: RationalWeylElement(ctx, t)
    )


# -- independent oracle: act with operators on functions via sympy -----------


def to_sympy_poly(p: Polynomial):
    syms = sympy.symbols(p.ring.names)
    expr = sympy.Integer(0)
    for e, c in p.terms.items():
        term = sympy.Rational(c.numerator, c.denominator)
        for s, k in zip(syms, e):
            term *= s ** k
        expr += term
    return expr


def to_sympy(r):
    if isinstance(r, Polynomial):
        return to_sympy_poly(r)
    return to_sympy_poly(r.num) / to_sympy_poly(r.den)


def apply_operator(p, f):
    """``p . f`` for a WeylElement or RationalWeylElement and a sympy expression."""
    ctx = p.ctx
    syms = sympy.symbols(ctx.table.names)
    r = p.to_rational() if isinstance(p, WeylElement) else p
    out = sympy.Integer(0)
    for beta, c in r.terms.items():
        g = f
        for s, k in zip(syms, beta):
            if k:
                g = sympy.diff(g, s, k)
        out += to_sympy(c) * g
    return out


@pytest.fixture
def ctx21():
    return WeylContext(["x", "y"], [2, 1])


@pytest.fixture
def example_ideal():
    return example_two_variables((2, 1))
