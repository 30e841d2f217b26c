"""Dense quaternion matrices and index-set enumeration.

Matrices are immutable, entries are exact quaternions, and the public
surface is 1-based so that formulas involving anchored rows, columns and
principal submatrices read the way they are usually written. Replacement
operations return fresh matrices; nothing mutates in place.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Tuple

from .errors import (DimensionMismatch, IndexOutOfRange, InvalidOrder,
                     ParseError)
from .quat import Quaternion, quaternion_from_json, quaternion_to_json

IndexSet = Tuple[int, ...]


def _as_quat(value) -> Quaternion:
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a matrix entry")
    if isinstance(value, (int, Fraction, str)):
        return Quaternion(value)
    raise TypeError(f"cannot treat {value!r} as a quaternion entry")


class QMatrix:
    """Immutable m-by-n matrix of exact quaternions."""

    __slots__ = ("_data",)

    def __init__(self, rows: Iterable[Iterable]):
        grid = tuple(tuple(_as_quat(v) for v in row) for row in rows)
        if not grid or not grid[0]:
            raise DimensionMismatch("a matrix needs at least one row and one column")
        width = len(grid[0])
        if any(len(row) != width for row in grid):
            raise DimensionMismatch("all rows must have the same length")
        object.__setattr__(self, "_data", grid)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)])

    # -- shape and access ----------------------------------------------------

    @property
    def rows(self) -> int:
        return len(self._data)

    @property
    def cols(self) -> int:
        return len(self._data[0])

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _check_row(self, i: int):
        if not 1 <= i <= self.rows:
            raise IndexOutOfRange(f"row {i} outside 1..{self.rows}")

    def _check_col(self, j: int):
        if not 1 <= j <= self.cols:
            raise IndexOutOfRange(f"column {j} outside 1..{self.cols}")

    def entry(self, i: int, j: int) -> Quaternion:
        self._check_row(i)
        self._check_col(j)
        return self._data[i - 1][j - 1]

    def row(self, i: int) -> Tuple[Quaternion, ...]:
        self._check_row(i)
        return self._data[i - 1]

    def column(self, j: int) -> Tuple[Quaternion, ...]:
        self._check_col(j)
        return tuple(row[j - 1] for row in self._data)

    # -- algebra ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, QMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __add__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("addition needs equal shapes")
        return QMatrix([[a + b for a, b in zip(ra, rb)]
                        for ra, rb in zip(self._data, other._data)])

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        if not isinstance(other, QMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("subtraction needs equal shapes")
        return QMatrix([[a - b for a, b in zip(ra, rb)]
                        for ra, rb in zip(self._data, other._data)])

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-v for v in row] for row in self._data])

    def __mul__(self, other):
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise DimensionMismatch(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = list(zip(*other._data))
            out = []
            for row in self._data:
                out.append([_dot(row, col) for col in cols])
            return QMatrix(out)
        if isinstance(other, bool):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __matmul__ = __mul__

    def __rmul__(self, other):
        if isinstance(other, bool) or not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self.scale(other)

    def scale(self, value) -> "QMatrix":
        """Multiply every entry by an exact real scalar (central, so no
        left/right ambiguity)."""
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError("scale expects an exact real scalar")
        return QMatrix([[v * value for v in row] for row in self._data])

    def power(self, m: int) -> "QMatrix":
        if not self.is_square():
            raise DimensionMismatch("powers need a square matrix")
        if not isinstance(m, int) or m < 0:
            raise ValueError("power expects a nonnegative integer exponent")
        result = QMatrix.identity(self.rows)
        for _ in range(m):
            result = result * self
        return result

    def adjoint(self) -> "QMatrix":
        """Conjugate transpose."""
        return QMatrix([[self._data[i][j].conjugate() for i in range(self.rows)]
                        for j in range(self.cols)])

    def is_hermitian(self) -> bool:
        if not self.is_square():
            return False
        n = self.rows
        for i in range(n):
            for j in range(i, n):
                if self._data[i][j] != self._data[j][i].conjugate():
                    return False
        return True

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self._data for v in row)

    # -- selection and replacement ----------------------------------------

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "QMatrix":
        rows = _checked_index_set(row_idx, self.rows, "row")
        cols = _checked_index_set(col_idx, self.cols, "column")
        return QMatrix([[self._data[i - 1][j - 1] for j in cols] for i in rows])

    def principal(self, beta: Sequence[int]) -> "QMatrix":
        """Principal submatrix on the rows and columns selected by beta."""
        return self.submatrix(beta, beta)

    def replace_column(self, j: int, column: Sequence) -> "QMatrix":
        self._check_col(j)
        col = [_as_quat(v) for v in column]
        if len(col) != self.rows:
            raise DimensionMismatch(
                f"replacement column has {len(col)} entries, need {self.rows}")
        return QMatrix([[col[i] if c == j - 1 else row[c] for c in range(self.cols)]
                        for i, row in enumerate(self._data)])

    def replace_row(self, i: int, row: Sequence) -> "QMatrix":
        self._check_row(i)
        new_row = [_as_quat(v) for v in row]
        if len(new_row) != self.cols:
            raise DimensionMismatch(
                f"replacement row has {len(new_row)} entries, need {self.cols}")
        return QMatrix([new_row if r == i - 1 else list(self._data[r])
                        for r in range(self.rows)])

    # -- JSON form ---------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "data": [[quaternion_to_json(v) for v in row] for row in self._data],
        }

    @classmethod
    def from_json(cls, obj) -> "QMatrix":
        if not isinstance(obj, dict):
            raise ParseError(f"matrix must be a JSON object, got {type(obj).__name__}")
        if set(obj) != {"rows", "cols", "data"}:
            raise ParseError("matrix object needs exactly the keys rows, cols, data")
        rows, cols, data = obj["rows"], obj["cols"], obj["data"]
        for label, value in (("rows", rows), ("cols", cols)):
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ParseError(f"{label} must be a positive integer")
        if not isinstance(data, list) or len(data) != rows:
            raise ParseError(f"data must be a list of {rows} rows")
        grid = []
        for row in data:
            if not isinstance(row, list) or len(row) != cols:
                raise ParseError(f"every data row must be a list of {cols} entries")
            grid.append([quaternion_from_json(v) for v in row])
        return cls(grid)

    def __str__(self) -> str:
        return "\n".join("[ " + ", ".join(str(v) for v in row) + " ]"
                         for row in self._data)

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"


def _dot(row, col):
    total = row[0] * col[0]
    for a, b in zip(row[1:], col[1:]):
        total = total + a * b
    return total


def _checked_index_set(idx: Sequence[int], bound: int, label: str) -> IndexSet:
    out = tuple(idx)
    if not out:
        raise IndexOutOfRange(f"empty {label} selection")
    prev = 0
    for v in out:
        if isinstance(v, bool) or not isinstance(v, int):
            raise IndexOutOfRange(f"{label} index {v!r} is not an integer")
        if v <= prev:
            raise IndexOutOfRange(f"{label} selection must be strictly increasing")
        if v > bound:
            raise IndexOutOfRange(f"{label} index {v} outside 1..{bound}")
        prev = v
    return out


def index_sets(n: int, k: int, anchor: Optional[int] = None) -> Tuple[IndexSet, ...]:
    """All strictly increasing k-subsets of {1..n} in lexicographic order,
    restricted to those containing ``anchor`` when one is given.

    Counts are C(n, k), or C(n-1, k-1) with an anchor.
    """
    if not 0 <= k <= n:
        raise InvalidOrder(f"order {k} outside 0..{n}")
    if anchor is not None and not 1 <= anchor <= n:
        raise IndexOutOfRange(f"anchor {anchor} outside 1..{n}")
    combos = itertools.combinations(range(1, n + 1), k)
    if anchor is None:
        return tuple(combos)
    return tuple(c for c in combos if anchor in c)
