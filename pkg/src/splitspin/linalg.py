"""Dense exact linear algebra over a Field.

Matrices are immutable grids of Scalars.  Elimination uses exact division
with first-nonzero pivot selection, so kernels, solutions and inverses are
deterministic: kernel bases come out in echelon order with a unit entry at
each free column.  Vectors are plain tuples of Scalars.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch
from .fields import Field, Scalar

Vector = tuple  # tuple of Scalar


def as_vector(field: Field, values: Iterable) -> Vector:
    return tuple(field.scalar(v) for v in values)


def zero_vector(field: Field, n: int) -> Vector:
    zero = field.zero()
    return tuple(zero for _ in range(n))


def basis_vector(field: Field, n: int, i: int) -> Vector:
    coords = [field.zero()] * n
    coords[i] = field.one()
    return tuple(coords)


def vec_add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vec_sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vec_neg(u: Vector) -> Vector:
    return tuple(-a for a in u)


def vec_scale(s: Scalar, u: Vector) -> Vector:
    return tuple(s * a for a in u)


def vec_is_zero(u: Vector) -> bool:
    return all(a.is_zero for a in u)


class Matrix:
    """An exact rows x cols matrix over a single field."""

    __slots__ = ("field", "entries")

    def __init__(self, field: Field, entries: Sequence[Sequence]):
        rows = tuple(tuple(field.scalar(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise ValueError("matrix must have positive dimensions")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("ragged rows")
        self.field = field
        self.entries = rows

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, field: Field, n: int) -> Matrix:
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> Matrix:
        zero = field.zero()
        return cls(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def diagonal(cls, field: Field, diag: Sequence) -> Matrix:
        d = [field.scalar(x) for x in diag]
        zero = field.zero()
        return cls(field, [[d[i] if i == j else zero for j in range(len(d))] for i in range(len(d))])

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence]) -> Matrix:
        cols = [tuple(field.scalar(x) for x in c) for c in columns]
        if not cols:
            raise ValueError("need at least one column")
        return cls(field, [[c[i] for c in cols] for i in range(len(cols[0]))])

    # -- basic structure -----------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def at(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> Matrix:
        return Matrix(self.field, list(zip(*self.entries)))

    def trace(self) -> Scalar:
        if not self.is_square:
            raise DimensionMismatch("trace of a non-square matrix")
        acc = self.field.zero()
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i + 1, self.cols)
        )

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"Matrix[{body}]"

    # -- arithmetic ----------------------------------------------------------

    def _check_same_field(self, other: Matrix):
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix addition shape mismatch")
        return Matrix(
            self.field,
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_field(other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("matrix subtraction shape mismatch")
        return Matrix(
            self.field,
            [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)],
        )

    def __neg__(self) -> Matrix:
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def scale(self, s) -> Matrix:
        s = self.field.scalar(s)
        return Matrix(self.field, [[s * a for a in row] for row in self.entries])

    def __matmul__(self, other: Matrix) -> Matrix:
        self._check_same_field(other)
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        zero = self.field.zero()
        out = []
        for row in self.entries:
            out_row = []
            for col in cols:
                acc = zero
                for a, b in zip(row, col):
                    if a and b:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return Matrix(self.field, out)

    def apply(self, vec: Sequence) -> Vector:
        v = [self.field.scalar(x) for x in vec]
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match column count")
        zero = self.field.zero()
        out = []
        for row in self.entries:
            acc = zero
            for a, x in zip(row, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def pow(self, k: int) -> Matrix:
        """Exact k-th power by repeated squaring; M**0 is the identity."""
        if not self.is_square:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise ValueError("negative power")
        result = Matrix.identity(self.field, self.rows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    # -- elimination ---------------------------------------------------------

    def rref(self) -> tuple[Matrix, tuple[int, ...]]:
        """Reduced row echelon form and the tuple of pivot columns."""
        m = [list(row) for row in self.entries]
        nr, nc = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(nc):
            pivot_row = None
            for i in range(r, nr):
                if m[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                continue
            m[r], m[pivot_row] = m[pivot_row], m[r]
            inv = m[r][c].inv()
            m[r] = [x * inv for x in m[r]]
            for i in range(nr):
                if i != r and m[i][c]:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == nr:
                break
        return Matrix(self.field, m), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> tuple[Vector, ...]:
        """Deterministic basis of the null space, one vector per free column."""
        reduced, pivots = self.rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        zero, one = self.field.zero(), self.field.one()
        basis = []
        for f in free:
            v = [zero] * self.cols
            v[f] = one
            for r, c in enumerate(pivots):
                v[c] = -reduced.entries[r][f]
            basis.append(tuple(v))
        return tuple(basis)

    def solve(self, rhs: Sequence) -> Vector | None:
        """One exact solution of self @ x = rhs, or None if inconsistent."""
        b = [self.field.scalar(x) for x in rhs]
        if len(b) != self.rows:
            raise DimensionMismatch("right-hand side length does not match row count")
        augmented = Matrix(
            self.field, [list(row) + [b[i]] for i, row in enumerate(self.entries)]
        )
        reduced, pivots = augmented.rref()
        if pivots and pivots[-1] == self.cols:
            return None  # a pivot in the constant column certifies inconsistency
        zero = self.field.zero()
        x = [zero] * self.cols
        for r, c in enumerate(pivots):
            x[c] = reduced.entries[r][self.cols]
        return tuple(x)

    def inverse(self) -> Matrix | None:
        """The exact inverse, or None if the matrix is singular."""
        if not self.is_square:
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        one, zero = self.field.one(), self.field.zero()
        augmented = Matrix(
            self.field,
            [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(self.entries)],
        )
        reduced, pivots = augmented.rref()
        if tuple(pivots[:n]) != tuple(range(n)):
            return None
        return Matrix(self.field, [row[n:] for row in reduced.entries])

    def det(self) -> Scalar:
        if not self.is_square:
            raise DimensionMismatch("determinant of a non-square matrix")
        m = [list(row) for row in self.entries]
        n = self.rows
        det = self.field.one()
        for c in range(n):
            pivot_row = None
            for i in range(c, n):
                if m[i][c]:
                    pivot_row = i
                    break
            if pivot_row is None:
                return self.field.zero()
            if pivot_row != c:
                m[c], m[pivot_row] = m[pivot_row], m[c]
                det = -det
            det = det * m[c][c]
            inv = m[c][c].inv()
            for i in range(c + 1, n):
                if m[i][c]:
                    f = m[i][c] * inv
                    m[i] = [a - f * b for a, b in zip(m[i], m[c])]
        return det


def span_contains(field: Field, basis: Sequence[Vector], vec: Vector) -> bool:
    """Whether vec lies in the span of the given vectors."""
    if vec_is_zero(vec):
        return True
    if not basis:
        return False
    return Matrix.from_columns(field, basis).solve(vec) is not None


def span_rank(field: Field, vectors: Sequence[Vector]) -> int:
    if not vectors:
        return 0
    return Matrix(field, vectors).rank()


def same_span(field: Field, first: Sequence[Vector], second: Sequence[Vector]) -> bool:
    """Whether two vector lists span the same subspace."""
    if not first and not second:
        return True
    if not first or not second:
        return all(vec_is_zero(v) for v in list(first) + list(second))
    r1 = span_rank(field, first)
    r2 = span_rank(field, second)
    return r1 == r2 == span_rank(field, list(first) + list(second))
