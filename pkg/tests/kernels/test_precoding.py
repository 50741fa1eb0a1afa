import numpy as np
import pytest

from src.kernels import zf_precoder_ref, zf_precoder_vec
from src.linalg import ComplexMatrix, hermitian_transpose, mat_mul, relative_error
from src.machine.vector_context import VectorContext
from src.utils.errors import ShapeError, SingularMatrixError


def test_identity_channel(ctx):
    identity = ComplexMatrix.identity(4)
    assert zf_precoder_ref(identity) == identity
    assert zf_precoder_vec(ctx, identity) == identity


def test_unitary_channel_inverts_to_its_adjoint(rng):
    q, _ = np.linalg.qr(rng.standard_normal((8, 8)) + 1j * rng.standard_normal((8, 8)))
    h = ComplexMatrix(q)
    assert relative_error(zf_precoder_ref(h), hermitian_transpose(h)) < 1e-12


@pytest.mark.parametrize("users,antennas", [(16, 16), (16, 32), (4, 32), (1, 8)])
def test_multiply_back_is_identity(random_matrix, make_ctx, users, antennas):
    h = random_matrix(users, antennas)
    for w in (zf_precoder_ref(h), zf_precoder_vec(make_ctx(1024, 4), h)):
        assert w.shape == (antennas, users)
        assert np.max(np.abs(mat_mul(h, w).array - np.eye(users))) < 1e-8


def test_rank_deficient_channel(ctx):
    h = ComplexMatrix([[1, 2], [2, 4]])
    with pytest.raises(SingularMatrixError) as e:
        zf_precoder_ref(h)
    assert e.value.column == 1
    with pytest.raises(SingularMatrixError):
        zf_precoder_vec(ctx, h)


def test_more_users_than_antennas(random_matrix, ctx):
    h = random_matrix(5, 4)
    with pytest.raises(ShapeError):
        zf_precoder_ref(h)
    with pytest.raises(ShapeError):
        zf_precoder_vec(ctx, h)


def test_vec_agrees_with_ref(random_matrix, preset):
    h = random_matrix(16, 32)
    assert relative_error(zf_precoder_vec(VectorContext(preset), h), zf_precoder_ref(h)) < 1e-9
