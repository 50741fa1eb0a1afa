"""Zero-forcing precoder W = H^H (H H^H)^-1, so that H W = I."""
from src.kernels.vector_blas import vec_hermitian_transpose, vec_mat_inverse, vec_mat_mul
from src.linalg.complex_matrix import ComplexMatrix
from src.linalg.ops import hermitian_transpose, mat_inverse, mat_mul
from src.machine.vector_context import VectorContext
from src.utils.errors import ShapeError


def _check_users(h: ComplexMatrix) -> None:
    if h.rows > h.cols:
        raise ShapeError(f"Shape mismatch: {h.rows} users exceed {h.cols} transmit antennas")


def zf_precoder_ref(h: ComplexMatrix) -> ComplexMatrix:
    _check_users(h)
    h_herm = hermitian_transpose(h)
    return mat_mul(h_herm, mat_inverse(mat_mul(h, h_herm)))


def zf_precoder_vec(ctx: VectorContext, h: ComplexMatrix) -> ComplexMatrix:
    _check_users(h)
    h_herm = vec_hermitian_transpose(ctx, h)
    gram = vec_mat_mul(ctx, h, h_herm)
    return vec_mat_mul(ctx, h_herm, vec_mat_inverse(ctx, gram))
