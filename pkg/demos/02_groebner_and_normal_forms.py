"""Gröbner bases, standard monomials and normal forms.

The ideal below is annihilated by 1/(x - y).  Its Gröbner basis has a finite
staircase, so the quotient by the ideal is a finite-dimensional vector space
over the rational functions; its dimension is the holonomic rank.

Run with:  python demos/02_groebner_and_normal_forms.py
"""

from weylconn import (
    WeylContext,
    WeylIdeal,
    buchberger,
    format_element,
    holonomic_rank,
    normal_form,
    parse_expr,
    parse_list,
    standard_monomials,
)
from weylconn.fixtures import dx_only

GENERATORS = "x*dx^2 - y*dy^2 + dx - dy; x*dx + y*dy + 1"
ctx = WeylContext(["x", "y"], weights=[2, 1])
ideal = WeylIdeal(ctx, parse_list(GENERATORS, ctx))

gb = buchberger(ideal)
print("Groebner basis:")
for g in gb:
    print("   ", format_element(g))

print("standard monomials:", standard_monomials(gb))
print("holonomic rank:    ", holonomic_rank(gb))

for text in ["dx", "dx*dy", "dy^2", "dy"]:
    nf = normal_form(parse_expr(text, ctx), gb)
    print(f"NF({text}) = {format_element(nf)}")

# Another weight vector gives another basis but the same rank.
# The weight vector is part of the context, so the generators are re-parsed.
ctx12 = WeylContext(["x", "y"], weights=[1, 2])
other = WeylIdeal(ctx12, parse_list(GENERATORS, ctx12))
print("weight (1,2): standard monomials", standard_monomials(other), "rank", holonomic_rank(other))

# An ideal that does not constrain y has infinite rank.
print("rank of <dx>:", holonomic_rank(dx_only()))
