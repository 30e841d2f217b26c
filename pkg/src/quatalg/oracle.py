"""Independent verification tools.

Everything here deliberately avoids the determinant machinery: quaternion
matrices are checked through their standard complex representation, where
each entry a0 + a1 i + a2 j + a3 k becomes the 2x2 complex block

    [ a0 + a1 i    a2 + a3 i ]
    [ -a2 + a3 i   a0 - a1 i ]

This map is an exact ring homomorphism, so ranks, products and adjoints can
be cross-checked against it without sharing a single code path with the
noncommutative determinant sums. Complex entries are kept as exact pairs of
rationals; the rank comes from pivoted elimination with no tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatch, InternalInconsistency
from .qmat import QMatrix


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number with rational real and imaginary parts."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re * other.re - self.im * other.im,
                                self.re * other.im + self.im * other.re)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n2 = self.re ** 2 + self.im ** 2
        if n2 == 0:
            raise ZeroDivisionError("zero has no inverse")
        return GaussianRational(self.re / n2, -self.im / n2)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __str__(self) -> str:
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


class ComplexMatrix:
    """Immutable matrix of exact complex rationals."""

    __slots__ = ("_data",)

    def __init__(self, rows):
        grid = tuple(tuple(v if isinstance(v, GaussianRational) else GaussianRational(v)
                           for v in row) for row in rows)
        if not grid or not grid[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionMismatch("all rows must have the same length")
        object.__setattr__(self, "_data", grid)

    def __setattr__(self, name, value):
        raise AttributeError("ComplexMatrix is immutable")

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return len(self._data[0])

    def entry(self, i: int, j: int) -> GaussianRational:
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise DimensionMismatch(f"entry ({i},{j}) outside {self.rows}x{self.cols}")
        return self._data[i - 1][j - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, ComplexMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("addition needs equal shapes")
        return ComplexMatrix([[a + b for a, b in zip(ra, rb)]
                              for ra, rb in zip(self._data, other._data)])

    def __mul__(self, other: "ComplexMatrix") -> "ComplexMatrix":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = list(zip(*other._data))
        out = []
        for row in self._data:
            new_row = []
            for col in cols:
                total = row[0] * col[0]
                for a, b in zip(row[1:], col[1:]):
                    total = total + a * b
                new_row.append(total)
            out.append(new_row)
        return ComplexMatrix(out)

    def adjoint(self) -> "ComplexMatrix":
        return ComplexMatrix([[self._data[i][j].conjugate() for i in range(self.rows)]
                              for j in range(self.cols)])


def complex_embedding(a: QMatrix) -> ComplexMatrix:
    """The 2m-by-2n complex image of an m-by-n quaternion matrix."""
    out = []
    for i in range(1, a.rows + 1):
        top, bottom = [], []
        for j in range(1, a.cols + 1):
            q = a.entry(i, j)
            top.append(GaussianRational(q.a0, q.a1))
            top.append(GaussianRational(q.a2, q.a3))
            bottom.append(GaussianRational(-q.a2, q.a3))
            bottom.append(GaussianRational(q.a0, -q.a1))
        out.append(top)
        out.append(bottom)
    return ComplexMatrix(out)


def embedding_rank(a: QMatrix) -> int:
    """Rank of a quaternion matrix, computed as half the exact rank of its
    complex image. Works for any matrix, Hermitian or not."""
    emb = complex_embedding(a)
    rows = [list(r) for r in emb._data]
    nrows, ncols = emb.rows, emb.cols
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if not rows[r][col].is_zero()), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = rows[rank][col].inverse()
        lead = rows[rank]
        for r in range(rank + 1, nrows):
            if rows[r][col].is_zero():
                continue
            factor = rows[r][col] * inv
            rows[r] = [x - factor * y for x, y in zip(rows[r], lead)]
        rank += 1
        if rank == nrows:
            break
    if rank % 2:
        raise InternalInconsistency("complex image of a quaternion matrix must have even rank")
    return rank // 2


def verify_drazin_axioms(a: QMatrix, x: QMatrix, k: int) -> bool:
    """True iff A^(k+1) X = A^k, X A X = X and A X = X A hold exactly."""
    if not a.is_square() or not x.is_square() or a.rows != x.rows:
        raise DimensionMismatch("axiom check needs square matrices of equal size")
    if not isinstance(k, int) or k < 0:
        raise ValueError("index k must be a nonnegative integer")
    ak = a.power(k)
    ak1 = ak * a
    return ak1 * x == ak and x * a * x == x and a * x == x * a
