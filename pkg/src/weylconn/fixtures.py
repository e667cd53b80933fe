"""Reference ideals used by the tests, the demos and the documentation."""

from __future__ import annotations

from typing import Callable, Dict, Sequence

from .groebner import WeylIdeal
from .parsing import parse_list
from .weyl import WeylContext


def _ideal(variables, weights, gens: str, params: Sequence[str] = ()) -> WeylIdeal:
    ctx = WeylContext(variables, weights, params)
    return WeylIdeal(ctx, parse_list(gens, ctx))


def example_two_variables(weights=(2, 1)) -> WeylIdeal:
    """Rank-2 ideal <x dx^2 - y dy^2 + dx - dy, x dx + y dy + 1> in D_2."""
    return _ideal(("x", "y"), weights, "x*dx^2 - y*dy^2 + dx - dy; x*dx + y*dy + 1")


def eps_example(weights=(1,)) -> WeylIdeal:
    """<x(1-x) dx^2 - eps(1-x) dx> over Q(eps)."""
    return _ideal(("x",), weights, "x*(1-x)*dx^2 - eps*(1-x)*dx", params=("eps",))


def constants(weights=(1, 1)) -> WeylIdeal:
    """<dx, dy>: only constant solutions."""
    return _ideal(("x", "y"), weights, "dx; dy")


def dx_only(weights=(1, 1)) -> WeylIdeal:
    """<dx> in D_2, of infinite holonomic rank."""
    return _ideal(("x", "y"), weights, "dx")


def gauss(weights=(1,)) -> WeylIdeal:
    """Gauss hypergeometric operator with symbolic a, b, c."""
    return _ideal(("x",), weights, "x*(1-x)*dx^2 + (c - (a+b+1)*x)*dx - a*b", params=("a", "b", "c"))


def airy(weights=(1,)) -> WeylIdeal:
    return _ideal(("x",), weights, "dx^2 - x")


def monomial_powers(weights=(1, 1)) -> WeylIdeal:
    """<x dx - a, y dy - b>, annihilating x^a y^b."""
    return _ideal(("x", "y"), weights, "x*dx - a; y*dy - b", params=("a", "b"))


def appell_f1(weights=(1, 1)) -> WeylIdeal:
    """Appell F1 system at a = 1/2, b1 = 1/3, b2 = 1/5, c = 2 (rank 3)."""
    a, b1, b2, c = "(1/2)", "(1/3)", "(1/5)", "2"
    gens = "; ".join([
        f"x*(1-x)*dx^2 + y*(1-x)*dx*dy + ({c} - ({a}+{b1}+1)*x)*dx - {b1}*y*dy - {a}*{b1}",
        f"y*(1-y)*dy^2 + x*(1-y)*dx*dy + ({c} - ({a}+{b2}+1)*y)*dy - {b2}*x*dx - {a}*{b2}",
        f"(x-y)*dx*dy - {b2}*dx + {b1}*dy",
    ])
    return _ideal(("x", "y"), weights, gens)


#: finite-rank ideals, keyed by name; each entry takes a weight vector
CATALOG: Dict[str, Callable[..., WeylIdeal]] = {
    "example_two_variables": example_two_variables,
    "eps_example": eps_example,
    "constants": constants,
    "gauss": gauss,
    "airy": airy,
    "monomial_powers": monomial_powers,
    "appell_f1": appell_f1,
}
