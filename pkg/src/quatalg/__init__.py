"""Exact quaternion matrix algebra.

Quaternion matrices over arbitrary-precision rationals, anchored
noncommutative row and column determinants, the determinantal Drazin
inverse of Hermitian matrices, Cramer-style solvers for AX = D, XA = D and
AXB = D, and an independent complex-embedding oracle.
"""

from .cramer import EquationInstance, solve_ax, solve_axb, solve_xa
from .drazin import (DrazinReport, bordered_cdet_sum, bordered_rdet_sum,
                     drazin_inverse, drazin_projectors, group_inverse,
                     limit_residuals, matrix_index)
from .ncdet import (DET_SIZE_CAP, cdet, char_coeffs, cofactor_left,
                    cofactor_right, herm_det, herm_inverse,
                    principal_minor_sum, rank_by_minors, rdet)
from .oracle import (ComplexMatrix, GaussianRational, complex_embedding,
                     embedding_rank, verify_drazin_axioms)
from .qmat import QMatrix, index_sets
from .quat import Quaternion

__version__ = "0.1.0"

__all__ = [
    "ComplexMatrix",
    "DET_SIZE_CAP",
    "DrazinReport",
    "EquationInstance",
    "GaussianRational",
    "QMatrix",
    "Quaternion",
    "bordered_cdet_sum",
    "bordered_rdet_sum",
    "cdet",
    "char_coeffs",
    "cofactor_left",
    "cofactor_right",
    "complex_embedding",
    "drazin_inverse",
    "drazin_projectors",
    "embedding_rank",
    "group_inverse",
    "herm_det",
    "herm_inverse",
    "index_sets",
    "limit_residuals",
    "matrix_index",
    "principal_minor_sum",
    "rank_by_minors",
    "rdet",
    "solve_ax",
    "solve_axb",
    "solve_xa",
    "verify_drazin_axioms",
]
