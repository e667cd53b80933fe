"""Connection matrices of left ideals in the Weyl algebra.

Typical use::

    from weylconn import WeylContext, WeylIdeal, parse_list, connection_matrices

    ctx = WeylContext(["x", "y"], weights=[2, 1])
    I = WeylIdeal(ctx, parse_list("x*dx^2 - y*dy^2 + dx - dy; x*dx + y*dy + 1", ctx))
    A = connection_matrices(I)
"""

from .arith import Polynomial, RationalFunction, VarTable, poly_gcd, poly_lcm, rat_derivative, poly_derivative
from .connection import (
    ConnectionSystem,
    EpsilonFactorization,
    NotABasis,
    OneForm,
    connection_matrices,
    connection_matrices_in_basis,
    gauge_matrix,
    gauge_transform,
    is_epsilon_factorized,
    is_integrable,
    render_one_form,
)
from .groebner import (
    GroebnerBasis,
    InfiniteRank,
    ReductionError,
    WeylIdeal,
    buchberger,
    holonomic_rank,
    normal_form,
    reduce_step,
    s_pair_d,
    standard_monomials,
)
from .linalg import Matrix, SingularMatrix
from .parsing import ParseError, parse_expr, parse_list, parse_matrix, parse_rational, parse_scalar
from .printing import format_element, format_matrix, format_polynomial, format_rational
from .weyl import (
    ContextMismatch,
    RationalWeylElement,
    WeylContext,
    WeylElement,
    clear_denominators,
    compare_d,
    compare_r,
    to_rational_form,
    weyl_mul,
)

__version__ = "0.1.0"
