from src.linalg.complex_matrix import Complex, ComplexMatrix
from src.linalg.ops import (
    frobenius_norm,
    hermitian_transpose,
    mat_add,
    mat_inverse,
    mat_mul,
    mat_scale,
    max_abs_diff,
    relative_error,
    relative_error_vector,
    singularity_threshold,
)

__all__ = [
    "Complex",
    "ComplexMatrix",
    "frobenius_norm",
    "hermitian_transpose",
    "mat_add",
    "mat_inverse",
    "mat_mul",
    "mat_scale",
    "max_abs_diff",
    "relative_error",
    "relative_error_vector",
    "singularity_threshold",
]
