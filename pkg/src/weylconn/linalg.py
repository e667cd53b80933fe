"""Small exact matrices over rational functions."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence, Tuple

from .arith import Polynomial, RationalFunction, VarTable


class SingularMatrix(ArithmeticError):
    pass


class Matrix:
    """Immutable m x k matrix of RationalFunctions."""

    __slots__ = ("ring", "rows")

    def __init__(self, ring: VarTable, rows: Sequence[Sequence]):
        self.ring = ring
        self.rows: Tuple[Tuple[RationalFunction, ...], ...] = tuple(
            tuple(_coerce(ring, e) for e in row) for row in rows
        )
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise ValueError("ragged matrix rows")

    @classmethod
    def identity(cls, ring: VarTable, m: int) -> "Matrix":
        return cls(ring, [[1 if i == j else 0 for j in range(m)] for i in range(m)])

    @classmethod
    def zeros(cls, ring: VarTable, m: int, k: int = None) -> "Matrix":
        return cls(ring, [[0] * (m if k is None else k) for _ in range(m)])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij) -> RationalFunction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.ring == other.ring and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def _check(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"dimension mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        return Matrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix(self.ring, [[-a for a in r] for r in self.rows])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        m, k = self.shape
        k2, p = other.shape
        if k != k2:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for c in cols:
                s = RationalFunction.const(self.ring, 0)
                for a, b in zip(r, c):
                    if a and b:
                        s = s + a * b
                row.append(s)
            out.append(row)
        return Matrix(self.ring, out)

    def scale(self, c) -> "Matrix":
        return Matrix(self.ring, [[c * a for a in r] for r in self.rows])

    def derivative(self, i: int) -> "Matrix":
        """Entry-wise partial derivative."""
        return Matrix(self.ring, [[a.derivative(i) for a in r] for r in self.rows])

    def is_zero(self) -> bool:
        return not any(a for r in self.rows for a in r)

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, list(zip(*self.rows)))

    def determinant(self) -> RationalFunction:
        return _bareiss(self)[0]

    def inverse(self) -> "Matrix":
        """Inverse via fraction-free Bareiss elimination on ``[A | I]``."""
        m, k = self.shape
        if m != k:
            raise ValueError("inverse of a non-square matrix")
        det, aug = _bareiss(self, augment=True)
        if not det:
            raise SingularMatrix("matrix is singular")
        # after Bareiss the left block is upper triangular; back-substitute
        rows = [list(r) for r in aug]
        for i in range(m - 1, -1, -1):
            piv = rows[i][i]
            rows[i] = [e / piv for e in rows[i]]
            for r in range(i):
                f = rows[r][i]
                if f:
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[i])]
        return Matrix(self.ring, [r[m:] for r in rows])

    def __repr__(self) -> str:
        from .printing import format_matrix

        return "Matrix(\n" + format_matrix(self.rows) + ")"


def _coerce(ring: VarTable, e) -> RationalFunction:
    if isinstance(e, RationalFunction):
        return e
    if isinstance(e, Polynomial):
        return RationalFunction(e, reduced=True)
    return RationalFunction.const(ring, Fraction(e))


def _bareiss(a: Matrix, augment: bool = False):
    """Fraction-free elimination; returns (determinant, eliminated rows)."""
    m, k = a.shape
    if m != k:
        raise ValueError("determinant of a non-square matrix")
    rows: List[List[RationalFunction]] = [list(r) for r in a.rows]
    if augment:
        one = RationalFunction.const(a.ring, 1)
        zero = RationalFunction.const(a.ring, 0)
        for i, r in enumerate(rows):
            r.extend(one if j == i else zero for j in range(m))
    sign = 1
    prev = RationalFunction.const(a.ring, 1)
    for p in range(m):
        if not rows[p][p]:
            swap = next((r for r in range(p + 1, m) if rows[r][p]), None)
            if swap is None:
                return RationalFunction.const(a.ring, 0), rows
            rows[p], rows[swap] = rows[swap], rows[p]
            sign = -sign
        for r in range(p + 1, m):
            rows[r] = [(rows[p][p] * rows[r][c] - rows[r][p] * rows[p][c]) / prev
                       for c in range(len(rows[r]))]
        prev = rows[p][p]
    det = rows[m - 1][m - 1] if m else RationalFunction.const(a.ring, 1)
    return (det if sign > 0 else -det), rows
