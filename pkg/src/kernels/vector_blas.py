"""
Vectorised complex matrix primitives driven through a VectorContext.

Matrices are processed as split planes (separate real and imaginary float64
arrays). Each primitive walks the strip-mined loop nest of its vector
algorithm and charges every instruction to the context; the arithmetic
itself is evaluated plane-wide with numpy, applying the same per-element
operation sequence the loop nest issues, so results do not depend on the
strip length.

Instruction mix per strip (vl elements):

  vec_mat_mul            per output row strip: 2 add (clear accumulators);
                         per reduction index t: 2 scalar (load a[i][t]),
                         2 unit loads (b row), 4 macc; then 2 unit stores
  vec_hermitian_transpose  per output row strip: 2 strided loads (input
                         column), 1 sub (negate imaginary), 2 unit stores
  vec_mat_add            per row strip: 4 unit loads, 2 add, 2 unit stores
  vec_mat_scale          2 scalar (load s) once; per row strip: 2 unit loads,
                         2 mul, 2 macc, 2 unit stores
  vec_mat_inverse        see its docstring
"""
from typing import Tuple

import numpy as np

from src.linalg.complex_matrix import ComplexMatrix
from src.linalg.ops import singularity_threshold
from src.machine.strip_mining import strip_mine
from src.machine.vector_context import VectorContext
from src.models.enum.arith_kind import ArithKind
from src.models.enum.mem_kind import MemKind
from src.utils.errors import ShapeError, SingularMatrixError
from src.utils.logger import get_current_logger

# scalar instructions for a complex reciprocal: |p|^2 (3), divide, two scales
RECIPROCAL_SCALAR_OPS = 6


def _planes(a: ComplexMatrix) -> Tuple[np.ndarray, np.ndarray]:
    return a.split_planes()


def vec_mat_mul(ctx: VectorContext, a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    """Row-oriented multiply: each output row strip accumulates a[i][t] * b[t] with macc."""
    if a.cols != b.rows:
        raise ShapeError(f"Shape mismatch: cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    m, k, n = a.rows, a.cols, b.cols

    for _ in range(m):
        for _, vl in strip_mine(ctx, n):
            ctx.vec_arith(ArithKind.ADD, vl, repeat=2)
            ctx.scalar_op(2 * k)
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=2 * k)
            ctx.vec_arith(ArithKind.MACC, vl, repeat=4 * k)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)

    ar, ai = _planes(a)
    br, bi = _planes(b)
    cr = np.zeros((m, n))
    ci = np.zeros((m, n))
    for t in range(k):
        cr += np.outer(ar[:, t], br[t])
        cr -= np.outer(ai[:, t], bi[t])
        ci += np.outer(ar[:, t], bi[t])
        ci += np.outer(ai[:, t], br[t])
    return ComplexMatrix.from_planes(cr, ci)


def vec_hermitian_transpose(ctx: VectorContext, a: ComplexMatrix) -> ComplexMatrix:
    for _ in range(a.cols):
        for _, vl in strip_mine(ctx, a.rows):
            ctx.vec_mem(MemKind.LOAD_STRIDED, vl, repeat=2)
            ctx.vec_arith(ArithKind.SUB, vl)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)

    ar, ai = _planes(a)
    return ComplexMatrix.from_planes(ar.T, -ai.T)


def vec_mat_add(ctx: VectorContext, a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
    if a.shape != b.shape:
        raise ShapeError(f"Shape mismatch: cannot add {a.shape} and {b.shape}")
    for _ in range(a.rows):
        for _, vl in strip_mine(ctx, a.cols):
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=4)
            ctx.vec_arith(ArithKind.ADD, vl, repeat=2)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)

    ar, ai = _planes(a)
    br, bi = _planes(b)
    return ComplexMatrix.from_planes(ar + br, ai + bi)


def _scale_planes(re: np.ndarray, im: np.ndarray, sr: float, si: float) -> Tuple[np.ndarray, np.ndarray]:
    return re * sr - im * si, re * si + im * sr


def vec_mat_scale(ctx: VectorContext, a: ComplexMatrix, s: complex) -> ComplexMatrix:
    s = complex(s)
    ctx.scalar_op(2)
    for _ in range(a.rows):
        for _, vl in strip_mine(ctx, a.cols):
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=2)
            ctx.vec_arith(ArithKind.MUL, vl, repeat=2)
            ctx.vec_arith(ArithKind.MACC, vl, repeat=2)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)

    ar, ai = _planes(a)
    return ComplexMatrix.from_planes(*_scale_planes(ar, ai, s.real, s.imag))


def _charge_norm(ctx: VectorContext, rows: int, cols: int) -> None:
    """Frobenius norm pass used for the singularity threshold."""
    for _ in range(rows):
        for _, vl in strip_mine(ctx, cols):
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=2)
            ctx.vec_arith(ArithKind.MUL, vl)
            ctx.vec_arith(ArithKind.MACC, vl)
            ctx.vec_reduce(vl)
    ctx.scalar_op(3)


def vec_mat_inverse(ctx: VectorContext, a: ComplexMatrix) -> ComplexMatrix:
    """
    Gauss-Jordan inversion with partial pivoting on the augmented [A | I].

    Per pivot column k:
      pivot search   strips over rows k..n-1: 2 strided loads, 1 mul, 1 macc,
                     1 reduce; then 2 scalar (select, threshold compare)
      row swap       only when the pivot is off-diagonal; strips over 2n:
                     4 unit loads, 4 unit stores
      normalise      6 scalar (complex reciprocal); strips over 2n: 2 unit
                     loads, 2 mul, 2 macc, 2 unit stores
      eliminate      strips over 2n: 2 unit loads (pivot row), then for each
                     of the other n-1 rows 2 scalar (factor), 2 unit loads,
                     4 macc, 2 unit stores
    """
    if not a.is_square():
        raise ShapeError(f"Shape mismatch: cannot invert {a.rows}x{a.cols}")
    n = a.rows
    width = 2 * n

    _charge_norm(ctx, n, n)
    threshold = singularity_threshold(a)

    for _ in range(n):
        for _, vl in strip_mine(ctx, width):
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)

    ar = np.hstack([a.array.real, np.eye(n)])
    ai = np.hstack([a.array.imag, np.zeros((n, n))])

    for k in range(n):
        for _, vl in strip_mine(ctx, n - k):
            ctx.vec_mem(MemKind.LOAD_STRIDED, vl, repeat=2)
            ctx.vec_arith(ArithKind.MUL, vl)
            ctx.vec_arith(ArithKind.MACC, vl)
            ctx.vec_reduce(vl)
        ctx.scalar_op(2)

        column = ar[k:, k] + 1j * ai[k:, k]
        p = k + int(np.argmax(np.abs(column)))
        pivot_mag = abs(complex(ar[p, k], ai[p, k]))
        if pivot_mag == 0.0 or pivot_mag < threshold:
            get_current_logger().debug(f"Singular pivot {pivot_mag:.3e} at column {k} (threshold {threshold:.3e})")
            raise SingularMatrixError(k)

        if p != k:
            for _, vl in strip_mine(ctx, width):
                ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=4)
                ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=4)
            ar[[k, p]] = ar[[p, k]]
            ai[[k, p]] = ai[[p, k]]

        ctx.scalar_op(RECIPROCAL_SCALAR_OPS)
        for _, vl in strip_mine(ctx, width):
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=2)
            ctx.vec_arith(ArithKind.MUL, vl, repeat=2)
            ctx.vec_arith(ArithKind.MACC, vl, repeat=2)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)
        pr, pi = ar[k, k], ai[k, k]
        mag2 = pr * pr + pi * pi
        ar[k], ai[k] = _scale_planes(ar[k], ai[k], pr / mag2, -pi / mag2)

        others = n - 1
        for _, vl in strip_mine(ctx, width):
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=2)
            ctx.scalar_op(2 * others)
            ctx.vec_mem(MemKind.LOAD_UNIT, vl, repeat=2 * others)
            ctx.vec_arith(ArithKind.MACC, vl, repeat=4 * others)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2 * others)
        fr = ar[:, k].copy()
        fi = ai[:, k].copy()
        fr[k] = 0.0
        fi[k] = 0.0
        row_r = ar[k].copy()
        row_i = ai[k].copy()
        ar -= np.outer(fr, row_r)
        ar += np.outer(fi, row_i)
        ai -= np.outer(fr, row_i)
        ai -= np.outer(fi, row_r)

    return ComplexMatrix.from_planes(ar[:, n:], ai[:, n:])
