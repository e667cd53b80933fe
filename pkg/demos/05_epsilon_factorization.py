"""Recognising connection matrices of the form eps^-k times an eps-free matrix.

Parameters are declared on the context and may appear in coefficients.  A
good choice of basis pulls a power of the parameter out of every matrix.

Run with:  python demos/05_epsilon_factorization.py
"""

from weylconn import connection_matrices, connection_matrices_in_basis, format_matrix, is_epsilon_factorized, parse_list
from weylconn.fixtures import eps_example

ideal = eps_example()
ctx = ideal.ctx

plain = connection_matrices(ideal)
print("standard basis, A_x =")
print(format_matrix(plain.matrices[0].rows))
print("factorized:", bool(is_epsilon_factorized(plain, "eps")))

scaled = connection_matrices_in_basis(ideal, parse_list("1; (1/eps)*dx", ctx))
print("basis {1, dx/eps}, A_x =")
print(format_matrix(scaled.matrices[0].rows))
result = is_epsilon_factorized(scaled, "eps")
print("factorized:", bool(result), "with k =", result.k)
