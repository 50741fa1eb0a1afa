"""
Pilot-based channel estimation: least squares (LSE) and linear MMSE.

Model: every receive antenna r observes the row y_r = h_r X + n_r during the
pilot block, where h_r is 1 x Nt, X is the Nt x Nt pilot matrix and
n_r ~ CN(0, sigma2 I). Stacking rows gives Y = H X + N.

LSE:   H_LS = Y X^-1. Each row carries the error e_r = n_r X^-1 whose
       covariance is E[e^H e] = sigma2 (X X^H)^-1.

LMMSE: with R_H = E[h^H h] (transmit-side correlation), the linear filter M
       minimising E||h - h_LS M||^2 solves the normal equations
       E[h_LS^H h_LS] M = E[h_LS^H h], i.e.
           M = (R_H + sigma2 (X X^H)^-1)^-1 R_H
       and the estimate is H_LS M. With sigma2 = 0 and R_H full rank the
       filter reduces to the identity and the estimate equals LSE.
"""
import numpy as np

from src.config import MMSE_CORRELATION_RHO
from src.kernels.vector_blas import (
    vec_hermitian_transpose,
    vec_mat_add,
    vec_mat_inverse,
    vec_mat_mul,
    vec_mat_scale,
)
from src.linalg.complex_matrix import ComplexMatrix
from src.linalg.ops import hermitian_transpose, mat_add, mat_inverse, mat_mul, mat_scale
from src.machine.vector_context import VectorContext
from src.models.schemas.channel_inputs import ChannelStats, Observation, PilotBlock
from src.utils.errors import ShapeError


def _check_pairing(y: Observation, x: PilotBlock) -> None:
    if y.y.cols != x.nt:
        raise ShapeError(f"Shape mismatch: observation has {y.y.cols} columns, pilot block is {x.nt}x{x.nt}")


def _check_stats(x: PilotBlock, stats: ChannelStats) -> None:
    if stats.r_h.rows != x.nt:
        raise ShapeError(f"Shape mismatch: R_H is {stats.r_h.rows}x{stats.r_h.cols}, expected {x.nt}x{x.nt}")


def exponential_correlation(n: int, rho: float = MMSE_CORRELATION_RHO) -> ComplexMatrix:
    """R[i][j] = rho^|i-j|."""
    idx = np.arange(n)
    return ComplexMatrix(rho ** np.abs(idx[:, None] - idx[None, :]))


# --------------------------------------------------------------------- LSE

def lse_estimate_ref(y: Observation, x: PilotBlock) -> ComplexMatrix:
    _check_pairing(y, x)
    return mat_mul(y.y, mat_inverse(x.x))


def lse_estimate_vec(ctx: VectorContext, y: Observation, x: PilotBlock) -> ComplexMatrix:
    _check_pairing(y, x)
    return vec_mat_mul(ctx, y.y, vec_mat_inverse(ctx, x.x))


# -------------------------------------------------------------------- MMSE

def mmse_filter_ref(x: PilotBlock, stats: ChannelStats) -> ComplexMatrix:
    _check_stats(x, stats)
    error_cov = mat_inverse(mat_mul(x.x, hermitian_transpose(x.x)))
    regularised = mat_add(stats.r_h, mat_scale(error_cov, stats.sigma2))
    return mat_mul(mat_inverse(regularised), stats.r_h)


def mmse_filter_vec(ctx: VectorContext, x: PilotBlock, stats: ChannelStats) -> ComplexMatrix:
    _check_stats(x, stats)
    gram = vec_mat_mul(ctx, x.x, vec_hermitian_transpose(ctx, x.x))
    error_cov = vec_mat_inverse(ctx, gram)
    regularised = vec_mat_add(ctx, stats.r_h, vec_mat_scale(ctx, error_cov, stats.sigma2))
    return vec_mat_mul(ctx, vec_mat_inverse(ctx, regularised), stats.r_h)


def mmse_estimate_ref(y: Observation, x: PilotBlock, stats: ChannelStats) -> ComplexMatrix:
    h_ls = lse_estimate_ref(y, x)
    return mat_mul(h_ls, mmse_filter_ref(x, stats))


def mmse_estimate_vec(ctx: VectorContext, y: Observation, x: PilotBlock, stats: ChannelStats) -> ComplexMatrix:
    with ctx.phase("ls"):
        h_ls = lse_estimate_vec(ctx, y, x)
    with ctx.phase("filter"):
        filt = mmse_filter_vec(ctx, x, stats)
    with ctx.phase("apply"):
        return vec_mat_mul(ctx, h_ls, filt)
