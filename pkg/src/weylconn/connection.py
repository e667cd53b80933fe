"""Connection matrices, gauge transformations and checks on them.

Orientation: row ``j`` of ``A_i`` holds the coefficients of
``normal_form(d_i * s_j)`` in the basis ``s_1, ..., s_m``, so that
``d_i . F = A_i F`` for ``F = (s_1 . f, ..., s_m . f)^T``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .arith import RationalFunction
from .groebner import GroebnerBasis, WeylIdeal, buchberger, normal_form, standard_monomials
from .linalg import Matrix, SingularMatrix
from .weyl import RationalWeylElement, WeylContext, WeylElement


class NotABasis(ArithmeticError):
    """The proposed elements do not form a C(x)-basis of R_n / R_n I."""


@dataclass(frozen=True)
class ConnectionSystem:
    """Basis ``s_1..s_m`` and one m x m matrix per variable."""

    ctx: WeylContext
    basis: Tuple[RationalWeylElement, ...]
    matrices: Tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(self.basis))
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if len(self.matrices) != self.ctx.n:
            raise ValueError(f"expected {self.ctx.n} matrices, got {len(self.matrices)}")
        m = len(self.basis)
        for a in self.matrices:
            if a.shape != (m, m):
                raise ValueError(f"matrix of shape {a.shape} does not match basis size {m}")
        assert is_integrable(self.matrices), "connection matrices violate integrability"

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __getitem__(self, i: int) -> Matrix:
        return self.matrices[i]

    def __iter__(self):
        return iter(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)


def _gb(ideal: Union[WeylIdeal, GroebnerBasis]) -> GroebnerBasis:
    return ideal if isinstance(ideal, GroebnerBasis) else buchberger(ideal)


def _basis_elements(ctx: WeylContext, betas) -> List[RationalWeylElement]:
    return [RationalWeylElement.from_coefficient(ctx, 1, b) for b in betas]


def _coordinates(p: RationalWeylElement, betas) -> List[RationalFunction]:
    return [p.coefficient(b) for b in betas]


def connection_matrices(ideal: Union[WeylIdeal, GroebnerBasis]) -> ConnectionSystem:
    """Connection matrices in the basis of standard monomials."""
    gb = _gb(ideal)
    ctx = gb.ctx
    betas = standard_monomials(gb)
    mats = []
    for i in range(ctx.n):
        rows = []
        for b in betas:
            shifted = tuple(k + (1 if j == i else 0) for j, k in enumerate(b))
            p = normal_form(RationalWeylElement.from_coefficient(ctx, 1, shifted), gb)
            rows.append(_coordinates(p, betas))
        mats.append(Matrix(ctx.table, rows))
    return ConnectionSystem(ctx, tuple(_basis_elements(ctx, betas)), tuple(mats))


def _as_rational(ctx: WeylContext, r) -> RationalWeylElement:
    if isinstance(r, WeylElement):
        return r.to_rational()
    if isinstance(r, RationalWeylElement):
        return r
    return RationalWeylElement.from_coefficient(ctx, r)


def gauge_matrix(ideal: Union[WeylIdeal, GroebnerBasis], basis: Sequence) -> Matrix:
    """Row ``j`` holds the standard-monomial coordinates of ``normal_form(r_j)``."""
    gb = _gb(ideal)
    ctx = gb.ctx
    betas = standard_monomials(gb)
    if len(basis) != len(betas):
        raise NotABasis(f"basis has {len(basis)} elements but the holonomic rank is {len(betas)}")
    rows = [_coordinates(normal_form(_as_rational(ctx, r), gb), betas) for r in basis]
    g = Matrix(ctx.table, rows)
    if betas and not g.determinant():
        raise NotABasis("the change-of-basis matrix is singular")
    return g


def gauge_transform(g: Matrix, system: ConnectionSystem) -> ConnectionSystem:
    """``g A_i g^-1 + (d_i . g) g^-1`` for every ``i``.

    The new basis is ``r_j = sum_k g_jk s_k``.
    """
    m = system.rank
    if g.shape != (m, m):
        raise ValueError(f"gauge matrix of shape {g.shape} does not match rank {m}")
    try:
        ginv = g.inverse()
    except SingularMatrix:
        raise NotABasis("gauge matrix is singular") from None
    mats = tuple(g @ a @ ginv + g.derivative(i) @ ginv for i, a in enumerate(system.matrices))
    ctx = system.ctx
    basis = []
    for row in g.rows:
        r = RationalWeylElement(ctx, {})
        for c, s in zip(row, system.basis):
            r = r + s.scale(c)
        basis.append(r)
    return ConnectionSystem(ctx, tuple(basis), mats)


def connection_matrices_in_basis(ideal: Union[WeylIdeal, GroebnerBasis], basis: Sequence) -> ConnectionSystem:
    gb = _gb(ideal)
    transformed = gauge_transform(gauge_matrix(gb, basis), connection_matrices(gb))
    return ConnectionSystem(gb.ctx, tuple(_as_rational(gb.ctx, r) for r in basis), transformed.matrices)


def is_integrable(system: Union[ConnectionSystem, Sequence[Matrix]]) -> bool:
    """Check ``d_i A_j - d_j A_i == A_i A_j - A_j A_i`` for all ``i < j``."""
    mats = list(system.matrices if isinstance(system, ConnectionSystem) else system)
    if not mats:
        return True
    shape = mats[0].shape
    if shape[0] != shape[1] or any(a.shape != shape for a in mats):
        raise ValueError("integrability needs square matrices of equal size")
    ring = mats[0].ring
    base = ring.base_indices
    if len(base) < len(mats):
        raise ValueError("more matrices than base variables")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            lhs = mats[j].derivative(base[i]) - mats[i].derivative(base[j])
            rhs = mats[i] @ mats[j] - mats[j] @ mats[i]
            if lhs != rhs:
                return False
    return True


@dataclass(frozen=True)
class EpsilonFactorization:
    """Outcome of :func:`is_epsilon_factorized`; truthy on success.

    ``k`` is the integer with ``eps^k A`` free of ``eps`` (``None`` on failure).
    """

    factorized: bool
    k: Optional[int] = None

    def __bool__(self) -> bool:
        return self.factorized


def _param_degree(p, i: int) -> Optional[int]:
    degs = {e[i] for e in p.terms}
    return degs.pop() if len(degs) == 1 else None


def is_epsilon_factorized(system: Union[ConnectionSystem, Sequence[Matrix]], param: str) -> EpsilonFactorization:
    mats = list(system.matrices if isinstance(system, ConnectionSystem) else system)
    if not mats:
        return EpsilonFactorization(True, 0)
    ring = mats[0].ring
    try:
        i = ring.index(param)
    except KeyError:
        raise ValueError(f"unknown parameter {param!r}") from None
    if not ring.is_param(i):
        raise ValueError(f"{param!r} is a variable, not a parameter")
    common = None
    for a in mats:
        for row in a.rows:
            for e in row:
                if not e:
                    continue
                dn, dd = _param_degree(e.num, i), _param_degree(e.den, i)
                if dn is None or dd is None:
                    return EpsilonFactorization(False)
                d = dn - dd
                if common is None:
                    common = d
                elif d != common:
                    return EpsilonFactorization(False)
    return EpsilonFactorization(True, 0 if common is None else -common)


@dataclass(frozen=True)
class OneForm:
    """Display-only matrix of one-forms; entry (j, k) is a list of (coefficient, variable)."""

    ctx: WeylContext
    entries: Tuple[Tuple[Tuple[Tuple[RationalFunction, str], ...], ...], ...]

    def entry_str(self, j: int, k: int) -> str:
        from .printing import format_rational

        parts = []
        for c, v in self.entries[j][k]:
            d = "d" + v
            if c == 1:
                parts.append(d)
            elif c == -1:
                parts.append("-" + d)
            else:
                s = format_rational(c)
                if not c.is_polynomial() or len(c.num.terms) == 1:
                    parts.append(f"{s}*{d}")
                else:
                    parts.append(f"({s})*{d}")
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        cells = [[self.entry_str(j, k) for k in range(len(row))] for j, row in enumerate(self.entries)]
        widths = [max(len(r[k]) for r in cells) for k in range(len(cells[0]))] if cells else []
        return "\n".join("| " + " ".join(s.ljust(w) for s, w in zip(r, widths)) + " |" for r in cells)


def render_one_form(system: ConnectionSystem) -> OneForm:
    ctx = system.ctx
    m = system.rank
    entries = []
    for j in range(m):
        row = []
        for k in range(m):
            row.append(tuple((a[j, k], v) for a, v in zip(system.matrices, ctx.variables) if a[j, k]))
        entries.append(tuple(row))
    return OneForm(ctx, tuple(entries))
