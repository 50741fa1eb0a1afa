"""
Radix-4 decimation-in-time Cooley-Tukey FFT.

Forward transform is unnormalised, X[k] = sum_t x[t] exp(-j 2 pi k t / N);
the inverse applies 1/N. Input is first permuted by base-4 digit reversal,
then log4(N) stages of 4-point butterflies combine quarter-length
sub-transforms:

    a_l = x[i_l] * W_L^(l j),  l = 0..3
    y0 = a0 + a1 + a2 + a3
    y1 = a0 - j a1 - a2 + j a3
    y2 = a0 - a1 + a2 - a3
    y3 = a0 + j a1 - a2 - j a3

The vectorised variant runs each stage across all N/4 butterflies in
strips. Per strip: 8 loads (four legs, split planes), 6 twiddle loads,
6 mul + 6 macc for the three twiddle products (both skipped in the first
stage, whose twiddles are all 1), 8 add + 8 sub, 8 stores. Leg and twiddle
accesses are strided in every stage except the last, where both are
contiguous. The digit-reversal reorder charges 2 strided loads and 2 unit
stores per strip over N.
"""
from typing import Sequence, Tuple

import numpy as np

from src.machine.strip_mining import strip_mine
from src.machine.vector_context import VectorContext
from src.models.enum.arith_kind import ArithKind
from src.models.enum.mem_kind import MemKind
from src.models.schemas.fft_plan import FftPlan, is_power_of_four
from src.utils.errors import ShapeError


def digit_reversal_permutation(n: int) -> np.ndarray:
    digits = 0
    while 4 ** digits < n:
        digits += 1
    perm = np.zeros(n, dtype=np.int64)
    for i in range(n):
        value, rev = i, 0
        for _ in range(digits):
            rev = rev * 4 + value % 4
            value //= 4
        perm[i] = rev
    return perm


def make_fft_plan(n: int) -> FftPlan:
    if not is_power_of_four(n):
        raise ShapeError(f"Shape mismatch: transform length {n} is not a power of 4")
    k = np.arange(n)
    twiddles = np.exp(-2j * np.pi * k / n)
    return FftPlan(n=n, twiddles=twiddles, digit_reversal=digit_reversal_permutation(n))


def _as_input(plan: FftPlan, x: Sequence[complex]) -> np.ndarray:
    data = np.asarray(x, dtype=np.complex128)
    if data.ndim != 1 or data.shape[0] != plan.n:
        raise ShapeError(f"Shape mismatch: expected {plan.n} samples, got {data.shape}")
    return data


def _stage_indices(n: int, quarter: int) -> Tuple[np.ndarray, np.ndarray]:
    """Leg-0 indices and twiddle exponents of every butterfly in one stage."""
    span = 4 * quarter
    groups = np.arange(0, n, span)
    j = np.arange(quarter)
    leg0 = (groups[:, None] + j[None, :]).ravel()
    exponent = np.tile(j, n // span) * (n // span)
    return leg0, exponent


def _stage_quarters(plan: FftPlan):
    quarter = 1
    while quarter < plan.n:
        yield quarter
        quarter *= 4


# ---------------------------------------------------------------- reference

def fft_radix4_ref(plan: FftPlan, x: Sequence[complex]) -> np.ndarray:
    data = _as_input(plan, x)[plan.digit_reversal]
    for quarter in _stage_quarters(plan):
        leg0, exponent = _stage_indices(plan.n, quarter)
        i1, i2, i3 = leg0 + quarter, leg0 + 2 * quarter, leg0 + 3 * quarter
        a0 = data[leg0]
        a1 = data[i1] * plan.twiddles[exponent]
        a2 = data[i2] * plan.twiddles[2 * exponent]
        a3 = data[i3] * plan.twiddles[3 * exponent]
        t0, t1 = a0 + a2, a0 - a2
        t2, t3 = a1 + a3, a1 - a3
        rot = t3.imag - 1j * t3.real  # -j * t3
        out = np.empty_like(data)
        out[leg0] = t0 + t2
        out[i1] = t1 + rot
        out[i2] = t0 - t2
        out[i3] = t1 - rot
        data = out
    return data


def ifft_radix4_ref(plan: FftPlan, x: Sequence[complex]) -> np.ndarray:
    data = _as_input(plan, x)
    return np.conj(fft_radix4_ref(plan, np.conj(data))) / plan.n


# --------------------------------------------------------------- vectorised

def _twiddle(re: np.ndarray, im: np.ndarray, wr: np.ndarray, wi: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    return re * wr - im * wi, re * wi + im * wr


def _fft_planes(ctx: VectorContext, plan: FftPlan, re: np.ndarray, im: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    n = plan.n
    for _, vl in strip_mine(ctx, n):
        ctx.vec_mem(MemKind.LOAD_STRIDED, vl, repeat=2)
        ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)
    re, im = re[plan.digit_reversal], im[plan.digit_reversal]
    wr_table, wi_table = plan.twiddles.real, plan.twiddles.imag

    for stage, quarter in enumerate(_stage_quarters(plan)):
        first = stage == 0
        last = 4 * quarter == n
        load = MemKind.LOAD_UNIT if last else MemKind.LOAD_STRIDED
        store = MemKind.STORE_UNIT if last else MemKind.STORE_STRIDED
        for _, vl in strip_mine(ctx, n // 4):
            ctx.vec_mem(load, vl, repeat=8)
            if not first:
                ctx.vec_mem(load, vl, repeat=6)
                ctx.vec_arith(ArithKind.MUL, vl, repeat=6)
                ctx.vec_arith(ArithKind.MACC, vl, repeat=6)
            ctx.vec_arith(ArithKind.ADD, vl, repeat=8)
            ctx.vec_arith(ArithKind.SUB, vl, repeat=8)
            ctx.vec_mem(store, vl, repeat=8)

        leg0, exponent = _stage_indices(n, quarter)
        i1, i2, i3 = leg0 + quarter, leg0 + 2 * quarter, leg0 + 3 * quarter
        a0r, a0i = re[leg0], im[leg0]
        a1r, a1i = re[i1], im[i1]
        a2r, a2i = re[i2], im[i2]
        a3r, a3i = re[i3], im[i3]
        if not first:
            a1r, a1i = _twiddle(a1r, a1i, wr_table[exponent], wi_table[exponent])
            a2r, a2i = _twiddle(a2r, a2i, wr_table[2 * exponent], wi_table[2 * exponent])
            a3r, a3i = _twiddle(a3r, a3i, wr_table[3 * exponent], wi_table[3 * exponent])
        t0r, t0i = a0r + a2r, a0i + a2i
        t1r, t1i = a0r - a2r, a0i - a2i
        t2r, t2i = a1r + a3r, a1i + a3i
        t3r, t3i = a1r - a3r, a1i - a3i
        out_r = np.empty(n)
        out_i = np.empty(n)
        out_r[leg0], out_i[leg0] = t0r + t2r, t0i + t2i
        out_r[i1], out_i[i1] = t1r + t3i, t1i - t3r
        out_r[i2], out_i[i2] = t0r - t2r, t0i - t2i
        out_r[i3], out_i[i3] = t1r - t3i, t1i + t3r
        re, im = out_r, out_i
    return re, im


def fft_radix4_vec(ctx: VectorContext, plan: FftPlan, x: Sequence[complex]) -> np.ndarray:
    data = _as_input(plan, x)
    re, im = _fft_planes(ctx, plan, data.real.copy(), data.imag.copy())
    return re + 1j * im


def ifft_radix4_vec(ctx: VectorContext, plan: FftPlan, x: Sequence[complex]) -> np.ndarray:
    """Inverse via conjugation: conj(fft(conj(X))) / N."""
    data = _as_input(plan, x)
    n = plan.n
    for _, vl in strip_mine(ctx, n):
        ctx.vec_arith(ArithKind.SUB, vl)
    re, im = _fft_planes(ctx, plan, data.real.copy(), -data.imag)
    for _, vl in strip_mine(ctx, n):
        ctx.vec_arith(ArithKind.SUB, vl)
        ctx.vec_arith(ArithKind.MUL, vl, repeat=2)
    return (re + 1j * -im) / n
