"""
Dense complex matrix arithmetic shared by every kernel.

All operations are pure: they never mutate their inputs and always return
a fresh ComplexMatrix.
"""
import numpy as np

from src.config import SINGULARITY_RTOL
from src.linalg.complex_matrix import ComplexMatrix
from src.utils.errors import ShapeError, SingularMatrixError
from src.utils.logger import get_current_logger


def mat_mul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.cols != b.rows:
        raise ShapeError(f"Shape mismatch: cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    return ComplexMatrix(a.array @ b.array)


def hermitian_transpose(a: ComplexMatrix) -> ComplexMatrix:
    return ComplexMatrix(np.conj(a.array).T)


def mat_add(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.shape != b.shape:
        raise ShapeError(f"Shape mismatch: cannot add {a.shape} and {b.shape}")
    return ComplexMatrix(a.array + b.array)


def mat_scale(a: ComplexMatrix, s: complex) -> ComplexMatrix:
    return ComplexMatrix(a.array * complex(s))


def frobenius_norm(a: ComplexMatrix) -> float:
    return float(np.sqrt(np.sum(a.array.real ** 2 + a.array.imag ** 2)))


def singularity_threshold(a: ComplexMatrix) -> float:
    """Smallest acceptable pivot magnitude for Gauss-Jordan on `a`."""
    return SINGULARITY_RTOL * frobenius_norm(a) / a.rows


def mat_inverse(a: ComplexMatrix) -> ComplexMatrix:
    """
    Invert a square matrix by Gauss-Jordan elimination with partial pivoting.

    The pivot for column k is the entry of largest magnitude on or below the
    diagonal. Raises SingularMatrixError naming the column whose best pivot
    falls below SINGULARITY_RTOL * ||A||_F / n.
    """
    if not a.is_square():
        raise ShapeError(f"Shape mismatch: cannot invert {a.rows}x{a.cols}")
    n = a.rows
    threshold = singularity_threshold(a)
    aug = np.hstack([a.to_numpy(), np.eye(n, dtype=np.complex128)])

    for k in range(n):
        p = k + int(np.argmax(np.abs(aug[k:, k])))
        pivot_mag = abs(aug[p, k])
        if pivot_mag == 0.0 or pivot_mag < threshold:
            get_current_logger().debug(f"Singular pivot {pivot_mag:.3e} at column {k} (threshold {threshold:.3e})")
            raise SingularMatrixError(k)
        if p != k:
            aug[[k, p]] = aug[[p, k]]
        aug[k] = aug[k] / aug[k, k]
        factors = aug[:, k].copy()
        factors[k] = 0.0
        aug -= np.outer(factors, aug[k])

    return ComplexMatrix(aug[:, n:])


def max_abs_diff(a: ComplexMatrix, b: ComplexMatrix) -> float:
    if a.shape != b.shape:
        raise ShapeError(f"Shape mismatch: cannot compare {a.shape} and {b.shape}")
    return float(np.max(np.abs(a.array - b.array)))


def relative_error(actual: ComplexMatrix, expected: ComplexMatrix) -> float:
    """||actual - expected||_F / ||expected||_F (absolute when expected is zero)."""
    if actual.shape != expected.shape:
        raise ShapeError(f"Shape mismatch: cannot compare {actual.shape} and {expected.shape}")
    diff = float(np.linalg.norm(actual.array - expected.array))
    scale = float(np.linalg.norm(expected.array))
    return diff / scale if scale > 0.0 else diff


def relative_error_vector(actual: np.ndarray, expected: np.ndarray) -> float:
    """Relative l2 distance between two complex sequences."""
    actual = np.asarray(actual, dtype=np.complex128)
    expected = np.asarray(expected, dtype=np.complex128)
    if actual.shape != expected.shape:
        raise ShapeError(f"Shape mismatch: cannot compare {actual.shape} and {expected.shape}")
    diff = float(np.linalg.norm(actual - expected))
    scale = float(np.linalg.norm(expected))
    return diff / scale if scale > 0.0 else diff
