"""Connection matrices of a holonomic ideal.

For the standard monomials s_1..s_m, each derivative dx_i maps the vector
(s_1 f, ..., s_m f) of a solution f to A_i times that vector.  Mixed
derivatives commute, which forces d_i A_j - d_j A_i = A_i A_j - A_j A_i.

Run with:  python demos/03_connection_matrices.py
"""

from weylconn import connection_matrices, format_element, format_matrix, is_integrable, render_one_form
from weylconn.fixtures import example_two_variables, gauss

system = connection_matrices(example_two_variables((2, 1)))
print("basis:", ", ".join(format_element(s) for s in system.basis))
for name, a in zip(system.ctx.variables, system.matrices):
    print(f"A_{name} =")
    print(format_matrix(a.rows))
print("integrable:", is_integrable(system))

print("as a matrix of one-forms:")
print(render_one_form(system))

# The Gauss hypergeometric equation gives the classical companion matrix,
# with the parameters a, b, c kept symbolic.
g = connection_matrices(gauss())
print("Gauss A_x =")
print(format_matrix(g.matrices[0].rows))
