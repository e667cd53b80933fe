"""Changing the basis of a connection: gauge matrices and gauge transforms.

Any family of operators whose normal forms are linearly independent defines a
new basis.  The gauge matrix expresses it in the standard monomials, and the
gauge transform carries the connection matrices over to the new basis.

Run with:  python demos/04_gauge_transform.py
"""

from weylconn import (
    NotABasis,
    connection_matrices,
    connection_matrices_in_basis,
    format_matrix,
    gauge_matrix,
    gauge_transform,
    is_integrable,
    parse_list,
)
from weylconn.fixtures import example_two_variables

ideal = example_two_variables((2, 1))
ctx = ideal.ctx
basis = parse_list("1; dx", ctx)

g = gauge_matrix(ideal, basis)
print("gauge matrix for {1, dx}:")
print(format_matrix(g.rows))

moved = gauge_transform(g, connection_matrices(ideal))
direct = connection_matrices_in_basis(ideal, basis)
print("transformed A_x =")
print(format_matrix(moved.matrices[0].rows))
print("agrees with the direct computation:", moved.matrices == direct.matrices)
print("still integrable:", is_integrable(moved))

# Two operators with proportional normal forms are not a basis.
try:
    gauge_matrix(ideal, parse_list("1; x", ctx))
except NotABasis as exc:
    print("rejected {1, x}:", exc)
