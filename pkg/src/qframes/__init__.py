"""Finite frames and dense linear algebra over the quaternions.

Right-module conventions throughout: operators act by left multiplication,
scalars multiply vectors on the right, and the inner product is conjugate
linear in its first slot.
"""

from .quaternion import Quaternion, ZERO, ONE, I, J, K
from .qlinalg import (
    QVector, QMatrix, HermEig, QSvd,
    inner, matvec, adjoint, complex_adjoint, embed_vector, unembed_vector,
    herm_eig, sqrt_psd, svd, operator_norm, pinv, matrix_rank, kernel_basis,
    solve_min_norm, is_surjective, is_bounded_below, orthogonal_projector,
)
from .frames import Frame, FrameBounds, FrameReport, PythagorasCheck
from .frame_ops import (
    IntertwinerResult, EquivalenceResult,
    map_frame, unitary_invariance_check, project_frame, intertwiner,
    are_equivalent, frame_with_frame_operator, bessel_from_operator,
)
from .checks import run_checks

__version__ = "0.1.0"

__all__ = [
    "Quaternion", "ZERO", "ONE", "I", "J", "K",
    "QVector", "QMatrix", "HermEig", "QSvd",
    "inner", "matvec", "adjoint", "complex_adjoint", "embed_vector",
    "unembed_vector", "herm_eig", "sqrt_psd", "svd", "operator_norm", "pinv",
    "matrix_rank", "kernel_basis", "solve_min_norm", "is_surjective",
    "is_bounded_below", "orthogonal_projector",
    "Frame", "FrameBounds", "FrameReport", "PythagorasCheck",
    "IntertwinerResult", "EquivalenceResult",
    "map_frame", "unitary_invariance_check", "project_frame", "intertwiner",
    "are_equivalent", "frame_with_frame_operator", "bessel_from_operator",
    "run_checks",
    "__version__",
]
