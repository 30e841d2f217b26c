#!/usr/bin/env python3
"""Numerical sanity sweep for the closed-form Drazin inverse.

For a fixed demo matrix and a few random Hermitian matrices, compares the
exact Drazin inverse against the floating-point shifted solves
(lambda I + A^(k+1))^(-1) A^k over a ladder of lambda values and prints the
max-entry deviations. The residual should fall roughly linearly in lambda
until it meets double-precision noise.
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from quatalg import QMatrix, limit_residuals
from quatalg.quat import I, J, K, Quaternion

LAMBDAS = (1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6)


def rand_hermitian(rng, n):
    g = QMatrix([[Quaternion(*(rng.randint(-2, 2) for _ in range(4)))
                  for _ in range(n)] for _ in range(n)])
    return g + g.adjoint()


def sweep(label, a):
    residuals = limit_residuals(a, LAMBDAS)
    print(f"\n{label} ({a.rows}x{a.cols})")
    print(f"  {'lambda':>10}   {'max-entry residual':>20}")
    for lam, res in zip(LAMBDAS, residuals):
        print(f"  {lam:>10.0e}   {res:>20.6e}")
    shrinking = all(x > y for x, y in zip(residuals, residuals[1:]))
    print(f"  monotonically shrinking: {shrinking}")


def main():
    demo = QMatrix([[1, K, -I], [-K, 2, J], [I, -J, 1]])
    sweep("singular demo matrix", demo)
    rng = random.Random(2718)
    for trial in range(3):
        sweep(f"random Hermitian #{trial + 1}", rand_hermitian(rng, 3))


if __name__ == "__main__":
    main()
