#!/usr/bin/env python3
"""End-to-end demo on a pair of singular Hermitian coefficients.

Solves A X B = D in exact arithmetic, printing every audit quantity along
the way (powers, ranks, indices, minor sums, the projected right-hand side,
and the solution with its defect), then cross-checks the solver output
against the product of Drazin inverses.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from quatalg import (QMatrix, drazin_inverse, matrix_index,
                     principal_minor_sum, rank_by_minors, solve_axb)
from quatalg.quat import I, J, K


def show(label, matrix):
    print(f"{label} =")
    for line in str(matrix).splitlines():
        print("   " + line)


def main():
    a = QMatrix([[1, K, -I], [-K, 2, J], [I, -J, 1]])
    b = QMatrix([[1, I], [-I, 1]])
    d = QMatrix([[1, I], [K, 1], [1, J]])

    show("A", a)
    show("B", b)
    show("D", d)

    rep_a = drazin_inverse(a)
    rep_b = drazin_inverse(b)
    print(f"\nindex(A) = {rep_a.index}   rank(A) = {rep_a.rank}   "
          f"order-{rep_a.rank} minor sum of A^2 = {rep_a.denominator}")
    print(f"index(B) = {rep_b.index}   rank(B) = {rep_b.rank}   "
          f"order-{rep_b.rank} minor sum of B^2 = {rep_b.denominator}")

    show("\nA^D", rep_a.inverse)
    show("B^D", rep_b.inverse)
    show("A D B (projected right-hand side)", a * d * b)

    x = solve_axb(a, d, b)
    show("\nX = A^D D B^D (exact)", x)

    direct = rep_a.inverse * d * rep_b.inverse
    print("\nsolver output equals the direct Drazin product:", x == direct)

    residual = a * x * b - d
    show("residual A X B - D", residual)
    print("equation is consistent:", residual.is_zero())

    assert x == direct
    assert matrix_index(a) == rep_a.index
    assert rank_by_minors(a) == rep_a.rank
    assert principal_minor_sum(a.power(2), rep_a.rank) == rep_a.denominator
    print("\nall cross-checks passed")


if __name__ == "__main__":
    main()
