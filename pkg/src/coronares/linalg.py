"""Dense exact-rational matrix algebra.

Every entry is a `fractions.Fraction`, always in lowest terms, so equality
is structural and bit-exact. Inversion is fraction-free (Bareiss-style
Gauss-Jordan over scaled integers), which keeps intermediate growth bounded
by minors of the input instead of letting naive rational elimination
snowball. The group inverse of a Laplacian-like matrix (symmetric, PSD,
kernel = the all-ones line) is obtained by the rank-one shift
(S + J/N)^(-1) - J/N, so the whole pipeline stays in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimMismatch, KernelMismatch, Singular

Entry = int | Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Matrix:
    """Immutable dense matrix of Fractions, row-major."""

    __slots__ = ("rows", "cols", "_data")

    rows: int
    cols: int

    def __init__(self, data: tuple[tuple[Fraction, ...], ...]):
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        if self.rows == 0 or self.cols == 0:
            raise DimMismatch("matrix must have at least one row and one column")
        for row in data:
            if len(row) != self.cols:
                raise DimMismatch("ragged rows in matrix data")
        self._data = data

    @classmethod
    def from_rows(cls, rows: Sequence[Iterable[Entry]]) -> "Matrix":
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(row) for row in self._data]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_symmetric(self) -> bool:
        if not self.is_square:
            return False
        d = self._data
        return all(d[i][j] == d[j][i] for i in range(self.rows) for j in range(i))

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self._data)))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def row_sums(self) -> list[Fraction]:
        return [sum(row) for row in self._data]

    def submatrix(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        """Rows r0..r1-1 and columns c0..c1-1 (0-based, half-open)."""
        return Matrix(tuple(row[c0:c1] for row in self._data[r0:r1]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            tuple(
                tuple(a + b for a, b in zip(ra, rb))
                for ra, rb in zip(self._data, other._data)
            )
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._require_same_shape(other)
        return Matrix(
            tuple(
                tuple(a - b for a, b in zip(ra, rb))
                for ra, rb in zip(self._data, other._data)
            )
        )

    def __neg__(self) -> "Matrix":
        return Matrix(tuple(tuple(-a for a in row) for row in self._data))

    def __mul__(self, scalar: Entry) -> "Matrix":
        if isinstance(scalar, Matrix):
            raise TypeError("use @ for matrix multiplication")
        s = Fraction(scalar)
        return Matrix(tuple(tuple(a * s for a in row) for row in self._data))

    __rmul__ = __mul__

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        # Multiply over integers with one common denominator per operand;
        # a single Fraction normalization per result entry beats per-term gcds.
        na, da = _int_grid(self)
        nb, db = _int_grid(other)
        den = da * db
        cols_b = list(zip(*nb))
        out = tuple(
            tuple(
                Fraction(sum(a * b for a, b in zip(row, col)), den)
                for col in cols_b
            )
            for row in na
        )
        return Matrix(out)

    def _require_same_shape(self, other: "Matrix") -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise DimMismatch(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __repr__(self) -> str:
        body = "; ".join(
            " ".join(str(x) for x in row) for row in self._data
        )
        return f"Matrix({self.rows}x{self.cols}: {body})"


def _int_grid(m: Matrix) -> tuple[list[list[int]], int]:
    """Scale a matrix to integers: returns (num_grid, den) with m = num_grid/den."""
    den = 1
    for row in m._data:
        for x in row:
            den = lcm(den, x.denominator)
    grid = [[x.numerator * (den // x.denominator) for x in row] for row in m._data]
    return grid, den


def zeros(rows: int, cols: int) -> Matrix:
    return Matrix(tuple(tuple(_ZERO for _ in range(cols)) for _ in range(rows)))


def identity(n: int) -> Matrix:
    return Matrix(
        tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))
    )


def ones_vector(n: int) -> Matrix:
    """All-ones column vector, n x 1."""
    return Matrix(tuple((_ONE,) for _ in range(n)))


def all_ones(n: int) -> Matrix:
    """All-ones square matrix J, n x n."""
    return Matrix(tuple(tuple(_ONE for _ in range(n)) for _ in range(n)))


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product: block (i,j) of the result is a[i,j] * b."""
    out_rows = []
    for arow in a._data:
        for brow in b._data:
            out_rows.append(tuple(x * y for x in arow for y in brow))
    return Matrix(tuple(out_rows))


def invert(a: Matrix) -> Matrix:
    """Exact inverse via fraction-free (Bareiss-style) Gauss-Jordan.

    The input is scaled to an integer matrix by the lcm of its entry
    denominators; elimination then uses the one-step Bareiss update
    (p*m_ij - m_ik*m_kj) / prev_pivot whose divisions are exact. Pivots are
    chosen by full search over the remaining submatrix: the nonzero entry
    of smallest absolute value, ties broken by smallest row index, then
    smallest column index.

    Raises Singular if no nonzero pivot exists at some step.
    """
    if not a.is_square:
        raise DimMismatch(f"cannot invert non-square {a.rows}x{a.cols} matrix")
    n = a.rows
    grid, scale = _int_grid(a)
    m = [grid[i] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
    colof = list(range(n))
    width = 2 * n
    d = 1
    for k in range(n):
        best = None
        for i in range(k, n):
            mi = m[i]
            for j in range(k, n):
                v = mi[j]
                if v:
                    key = (-v if v < 0 else v, i, j)
                    if best is None or key < best:
                        best = key
        if best is None:
            raise Singular("matrix is singular")
        _, pi, pj = best
        if pi != k:
            m[k], m[pi] = m[pi], m[k]
        if pj != k:
            for row in m:
                row[k], row[pj] = row[pj], row[k]
            colof[k], colof[pj] = colof[pj], colof[k]
        mk = m[k]
        p = mk[k]
        for i in range(n):
            if i == k:
                continue
            mi = m[i]
            f = mi[k]
            for j in range(width):
                if j == k:
                    continue
                mi[j] = (p * mi[j] - f * mk[j]) // d
            mi[k] = 0
        d = p
    out = [[_ZERO] * n for _ in range(n)]
    for r in range(n):
        mr = m[r]
        tr = out[colof[r]]
        for c in range(n):
            tr[c] = Fraction(scale * mr[n + c], d)
    return Matrix(tuple(tuple(row) for row in out))


@dataclass(frozen=True)
class PartitionedMatrix:
    """A 2x2 block partition [[a11, a12], [a21, a22]] of a square matrix."""

    a11: Matrix
    a12: Matrix
    a21: Matrix
    a22: Matrix

    def __post_init__(self) -> None:
        if not (self.a11.is_square and self.a22.is_square):
            raise DimMismatch("diagonal blocks must be square")
        p, q = self.a11.rows, self.a22.rows
        if self.a12.rows != p or self.a12.cols != q:
            raise DimMismatch("a12 must be p x q")
        if self.a21.rows != q or self.a21.cols != p:
            raise DimMismatch("a21 must be q x p")

    @classmethod
    def split(cls, m: Matrix, p: int) -> "PartitionedMatrix":
        """Partition a square matrix after its first p rows/columns."""
        if not m.is_square or not 0 < p < m.rows:
            raise DimMismatch("split point must be interior to a square matrix")
        return cls(
            a11=m.submatrix(0, p, 0, p),
            a12=m.submatrix(0, p, p, m.cols),
            a21=m.submatrix(p, m.rows, 0, p),
            a22=m.submatrix(p, m.rows, p, m.cols),
        )

    def assemble(self) -> Matrix:
        top = tuple(ra + rb for ra, rb in zip(self.a11._data, self.a12._data))
        bottom = tuple(ra + rb for ra, rb in zip(self.a21._data, self.a22._data))
        return Matrix(top + bottom)


def schur_complement(pm: PartitionedMatrix) -> Matrix:
    """Schur complement of a11: a22 - a21 * a11^(-1) * a12."""
    return pm.a22 - pm.a21 @ invert(pm.a11) @ pm.a12


def block_inverse(pm: PartitionedMatrix) -> Matrix:
    """Inverse of the assembled matrix via its Schur complement.

    With S = a22 - a21*a11^(-1)*a12 nonsingular, the inverse is
    [[a11^(-1) + a11^(-1)*a12*S^(-1)*a21*a11^(-1), -a11^(-1)*a12*S^(-1)],
     [-S^(-1)*a21*a11^(-1),                         S^(-1)]].
    """
    a_inv = invert(pm.a11)
    s_inv = invert(pm.a22 - pm.a21 @ a_inv @ pm.a12)
    left = a_inv @ pm.a12 @ s_inv
    right = s_inv @ pm.a21 @ a_inv
    return PartitionedMatrix(
        a11=a_inv + left @ pm.a21 @ a_inv,
        a12=-left,
        a21=-right,
        a22=s_inv,
    ).assemble()


def group_inverse_laplacian_like(s: Matrix) -> Matrix:
    """Group inverse of a symmetric PSD matrix whose kernel is span(1).

    Computed exactly as (S + J/N)^(-1) - J/N. Valid because the rank-one
    shift acts as the identity on span(1) and leaves the complement alone.
    Raises KernelMismatch when the shifted matrix is singular, i.e. the
    kernel is not exactly the all-ones line.
    """
    if not s.is_square:
        raise DimMismatch("group inverse requires a square matrix")
    n = s.rows
    shift = Fraction(1, n) * all_ones(n)
    try:
        inv = invert(s + shift)
    except Singular:
        raise KernelMismatch(
            "rank-one shift is singular: kernel is not the all-ones line"
        ) from None
    return inv - shift


def verify_one_inverse(a: Matrix, x: Matrix) -> bool:
    """True iff a @ x @ a == a exactly."""
    return a @ x @ a == a


def verify_group_inverse(a: Matrix, x: Matrix) -> bool:
    """True iff AXA=A, XAX=X and AX=XA all hold exactly."""
    ax = a @ x
    xa = x @ a
    return ax @ a == a and x @ ax == x and ax == xa
