"""Cramer-style Drazin-inverse solutions of AX = D, XA = D and AXB = D.

The coefficient matrices are Hermitian; the right-hand side is arbitrary.
Each solver expresses every entry of X = A^D D (resp. D A^D, A^D D B^D) as
a ratio of exact minor sums, with the numerators built from anchored
bordered determinants of A^(k+1) (and B^(k2+1)) and the denominators from
sums of principal minors. When the equation itself is inconsistent the
returned X is still the Drazin-inverse solution; no claim is made that it
satisfies the original equation, which is why callers can ask for the
residual.

The two-sided solver has two independent routes (border the A-side first or
the B-side first); by default both are evaluated and compared against each
other and against the directly multiplied product of Drazin inverses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .drazin import (_index_data, bordered_cdet_sum, bordered_rdet_sum,
                     drazin_inverse)
from .errors import DimensionMismatch, InternalInconsistency, NotHermitian
from .ncdet import principal_minor_sum
from .qmat import QMatrix


def _require_hermitian(m: QMatrix, name: str):
    if not m.is_hermitian():
        raise NotHermitian(f"coefficient matrix {name} must be Hermitian")


def solve_ax(a: QMatrix, b: QMatrix, self_check: bool = True) -> QMatrix:
    """Drazin-inverse solution X = A^D B of A X = B.

    Entry (i, j) is the bordered column-determinant sum of A^(k+1) with
    column i replaced by column j of A^k B, divided by the order-r minor sum
    of A^(k+1).
    """
    _require_hermitian(a, "A")
    if b.rows != a.rows:
        raise DimensionMismatch(
            f"right-hand side has {b.rows} rows, coefficient has {a.rows}")
    k, r, ak, ak1 = _index_data(a)
    n, m = a.rows, b.cols
    if r == 0:
        return QMatrix.zeros(n, m)
    bhat = ak * b
    denom = principal_minor_sum(ak1, r)
    x = QMatrix([[bordered_cdet_sum(ak1, i, bhat.column(j), r) / denom
                  for j in range(1, m + 1)] for i in range(1, n + 1)])
    if self_check and x != drazin_inverse(a).inverse * b:
        raise InternalInconsistency("solve_ax disagrees with the direct product")
    return x


def solve_xa(a: QMatrix, b: QMatrix, self_check: bool = True) -> QMatrix:
    """Drazin-inverse solution X = B A^D of X A = B.

    Mirror of ``solve_ax``: entry (i, j) borders row j of A^(k+1) with row i
    of B A^k and sums anchored row determinants.
    """
    _require_hermitian(a, "A")
    if b.cols != a.rows:
        raise DimensionMismatch(
            f"right-hand side has {b.cols} columns, coefficient has {a.rows}")
    k, r, ak, ak1 = _index_data(a)
    n, m = a.rows, b.rows
    if r == 0:
        return QMatrix.zeros(m, n)
    bcheck = b * ak
    denom = principal_minor_sum(ak1, r)
    x = QMatrix([[bordered_rdet_sum(ak1, j, bcheck.row(i), r) / denom
                  for j in range(1, n + 1)] for i in range(1, m + 1)])
    if self_check and x != b * drazin_inverse(a).inverse:
        raise InternalInconsistency("solve_xa disagrees with the direct product")
    return x


def solve_axb(a: QMatrix, d: QMatrix, b: QMatrix, self_check: bool = True) -> QMatrix:
    """Drazin-inverse solution X = A^D D B^D of A X B = D.

    Works through the doubly projected right-hand side A^(k1) D B^(k2). The
    default mode evaluates both bordering orders (B-side inner vector, then
    A-side bordering; and the transposed route) plus the direct product of
    Drazin inverses, and requires exact agreement; ``self_check=False``
    evaluates only the first route.
    """
    _require_hermitian(a, "A")
    _require_hermitian(b, "B")
    if d.rows != a.rows or d.cols != b.rows:
        raise DimensionMismatch(
            f"right-hand side is {d.rows}x{d.cols}, need {a.rows}x{b.rows}")
    k1, r1, ak, ak1 = _index_data(a)
    k2, r2, bk, bk1 = _index_data(b)
    n, m = a.rows, b.rows
    if r1 == 0 or r2 == 0:
        return QMatrix.zeros(n, m)
    dtilde = ak * d * bk
    denom = principal_minor_sum(ak1, r1) * principal_minor_sum(bk1, r2)
    cols = []
    for j in range(1, m + 1):
        inner = [bordered_rdet_sum(bk1, j, dtilde.row(l), r2) for l in range(1, n + 1)]
        cols.append([bordered_cdet_sum(ak1, i, inner, r1) / denom
                     for i in range(1, n + 1)])
    x = QMatrix([[cols[j][i] for j in range(m)] for i in range(n)])
    if self_check:
        alt_rows = []
        for i in range(1, n + 1):
            inner = [bordered_cdet_sum(ak1, i, dtilde.column(t), r1)
                     for t in range(1, m + 1)]
            alt_rows.append([bordered_rdet_sum(bk1, j, inner, r2) / denom
                             for j in range(1, m + 1)])
        if QMatrix(alt_rows) != x:
            raise InternalInconsistency("the two bordering routes disagree")
        direct = drazin_inverse(a).inverse * d * drazin_inverse(b).inverse
        if direct != x:
            raise InternalInconsistency("solve_axb disagrees with the direct product")
    return x


@dataclass(frozen=True)
class EquationInstance:
    """One matrix equation: kind 'AX' (A X = D), 'XA' (X A = D) or
    'AXB' (A X B = D), with Hermitian coefficients."""

    kind: str
    a: QMatrix
    d: QMatrix
    b: Optional[QMatrix] = None

    def validate(self):
        if self.kind not in ("AX", "XA", "AXB"):
            raise ValueError(f"unknown equation kind {self.kind!r}")
        _require_hermitian(self.a, "A")
        if self.kind == "AX" and self.d.rows != self.a.rows:
            raise DimensionMismatch("AX = D needs D with as many rows as A")
        if self.kind == "XA" and self.d.cols != self.a.rows:
            raise DimensionMismatch("XA = D needs D with as many columns as A")
        if self.kind == "AXB":
            if self.b is None:
                raise DimensionMismatch("AXB = D needs the coefficient B")
            _require_hermitian(self.b, "B")
            if self.d.rows != self.a.rows or self.d.cols != self.b.rows:
                raise DimensionMismatch("AXB = D needs D shaped rows(A) x rows(B)")

    def solve(self, self_check: bool = True) -> QMatrix:
        self.validate()
        if self.kind == "AX":
            return solve_ax(self.a, self.d, self_check)
        if self.kind == "XA":
            return solve_xa(self.a, self.d, self_check)
        return solve_axb(self.a, self.d, self.b, self_check)

    def residual(self, x: QMatrix) -> QMatrix:
        """Defect of x in the original equation (zero iff x solves it)."""
        if self.kind == "AX":
            return self.a * x - self.d
        if self.kind == "XA":
            return x * self.a - self.d
        return self.a * x * self.b - self.d
