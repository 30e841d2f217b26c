"""Shared fixtures: the golden worked example and random generators."""

from fractions import Fraction

from hypothesis import strategies as st

from quatalg import QMatrix, Quaternion
from quatalg.quat import I, J, K


def sample_a() -> QMatrix:
    """3x3 singular Hermitian coefficient of the worked example."""
    return QMatrix([[1, K, -I], [-K, 2, J], [I, -J, 1]])


def sample_b() -> QMatrix:
    """2x2 singular Hermitian coefficient of the worked example."""
    return QMatrix([[1, I], [-I, 1]])


def sample_d() -> QMatrix:
    """3x2 right-hand side of the worked example."""
    return QMatrix([[1, I], [K, 1], [1, J]])


def sample_solution() -> QMatrix:
    """Drazin-inverse solution of A X B = D for the matrices above."""
    return QMatrix([
        [Quaternion(3, -1, 2, 0), Quaternion(1, 3, 0, -2)],
        [Quaternion(0, -3, -1, 4), Quaternion(3, 0, 4, 1)],
        [Quaternion(1, 3, 0, 2), Quaternion(-3, 1, 2, 0)],
    ]).scale(Fraction(1, 8))


def rand_quat(rng, span=2) -> Quaternion:
    return Quaternion(rng.randint(-span, span), rng.randint(-span, span),
                      rng.randint(-span, span), rng.randint(-span, span))


def rand_qmatrix(rng, rows, cols, span=2) -> QMatrix:
    return QMatrix([[rand_quat(rng, span) for _ in range(cols)]
                    for _ in range(rows)])


def rand_hermitian(rng, n, span=2, mode=None) -> QMatrix:
    """Random Hermitian matrix, either a Gram product G G* or a symmetrized
    sum G + G* of a small-integer quaternion matrix G."""
    g = rand_qmatrix(rng, n, n, span)
    if mode is None:
        mode = rng.choice(("gram", "sym"))
    return g * g.adjoint() if mode == "gram" else g + g.adjoint()


small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
quaternions = st.builds(Quaternion, small_rationals, small_rationals,
                        small_rationals, small_rationals)
nonzero_quaternions = quaternions.filter(bool)
int_quaternions = st.builds(Quaternion, *(st.integers(-2, 2) for _ in range(4)))


def qmatrix_strategy(rows, cols):
    return st.lists(st.lists(int_quaternions, min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows).map(QMatrix)


def hermitian_strategy(n):
    return qmatrix_strategy(n, n).map(lambda g: g + g.adjoint())
