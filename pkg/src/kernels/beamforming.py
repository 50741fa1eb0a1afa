"""
Uniform linear array steering vectors, steered channel construction and
per-antenna beamforming weights.

Angles are measured from array broadside and enter the phase through
sin(theta): a[m] = exp(-j 2 pi (d / lambda) m sin(theta)).

Trigonometry is charged as one scalar instruction per path; the model has
no vector trig unit. Per strip over antennas the steering generator issues
1 add (index ramp), 1 mul (phase ramp), 2 mul + 2 macc (phasor rotation).
The channel builder adds 4 macc per path for the gain product and 2 add /
2 unit stores per user strip. Beam weights load each precoder column with
2 strided loads, form |w|^2 with 1 mul + 1 macc, then spend 2 scalar
instructions per element (sqrt, atan2) and 2 unit stores.
"""
import math

import numpy as np

from src.kernels.precoding import zf_precoder_ref, zf_precoder_vec
from src.linalg.complex_matrix import ComplexMatrix
from src.machine.strip_mining import strip_mine
from src.machine.vector_context import VectorContext
from src.models.enum.arith_kind import ArithKind
from src.models.enum.mem_kind import MemKind
from src.models.schemas.steering import BeamWeights, SteeringArrayConfig
from src.utils.errors import ShapeError

# sin(theta) and the phasor per path
TRIG_SCALAR_OPS = 1
GAIN_SCALAR_OPS = 2


def _phase_step(spacing_wavelengths: float, angle_rad: float) -> float:
    return 2.0 * math.pi * spacing_wavelengths * math.sin(angle_rad)


def _steering(m_antennas: int, spacing_wavelengths: float, angle_rad: float) -> np.ndarray:
    if m_antennas < 1:
        raise ShapeError(f"Shape mismatch: need at least one antenna, got {m_antennas}")
    m = np.arange(m_antennas)
    return np.exp(-1j * _phase_step(spacing_wavelengths, angle_rad) * m)


def _charge_steering_strip(ctx: VectorContext, vl: int, paths: int = 1) -> None:
    ctx.vec_arith(ArithKind.ADD, vl, repeat=paths)
    ctx.vec_arith(ArithKind.MUL, vl, repeat=3 * paths)
    ctx.vec_arith(ArithKind.MACC, vl, repeat=2 * paths)


# ---------------------------------------------------------------- reference

def steering_vector_ref(m_antennas: int, spacing_wavelengths: float, angle_rad: float) -> np.ndarray:
    return _steering(m_antennas, spacing_wavelengths, angle_rad)


def build_steered_channel_ref(cfg: SteeringArrayConfig) -> ComplexMatrix:
    h = np.zeros((cfg.num_users, cfg.num_antennas), dtype=np.complex128)
    for u, user in enumerate(cfg.users):
        for path in user.paths:
            h[u] += path.gain * _steering(cfg.num_antennas, cfg.spacing_wavelengths, path.angle_rad)
    return ComplexMatrix(h)


def beam_weights_ref(h: ComplexMatrix) -> BeamWeights:
    return BeamWeights.from_matrix(zf_precoder_ref(h))


# --------------------------------------------------------------- vectorised

def steering_vector_vec(ctx: VectorContext, m_antennas: int, spacing_wavelengths: float,
                        angle_rad: float) -> np.ndarray:
    out = _steering(m_antennas, spacing_wavelengths, angle_rad)
    ctx.scalar_op(TRIG_SCALAR_OPS)
    for _, vl in strip_mine(ctx, m_antennas):
        _charge_steering_strip(ctx, vl)
        ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)
    return out


def build_steered_channel_vec(ctx: VectorContext, cfg: SteeringArrayConfig) -> ComplexMatrix:
    m = cfg.num_antennas
    hr = np.zeros((cfg.num_users, m))
    hi = np.zeros((cfg.num_users, m))
    for u, user in enumerate(cfg.users):
        paths = len(user.paths)
        ctx.scalar_op((TRIG_SCALAR_OPS + GAIN_SCALAR_OPS) * paths)
        for _, vl in strip_mine(ctx, m):
            ctx.vec_arith(ArithKind.ADD, vl, repeat=2)
            _charge_steering_strip(ctx, vl, paths)
            ctx.vec_arith(ArithKind.MACC, vl, repeat=4 * paths)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)
        for path in user.paths:
            steer = _steering(m, cfg.spacing_wavelengths, path.angle_rad)
            gr, gi = path.gain.real, path.gain.imag
            hr[u] += gr * steer.real
            hr[u] -= gi * steer.imag
            hi[u] += gr * steer.imag
            hi[u] += gi * steer.real
    return ComplexMatrix.from_planes(hr, hi)


def beam_weights_vec(ctx: VectorContext, h: ComplexMatrix) -> BeamWeights:
    w = zf_precoder_vec(ctx, h)
    for _ in range(w.cols):
        for _, vl in strip_mine(ctx, w.rows):
            ctx.vec_mem(MemKind.LOAD_STRIDED, vl, repeat=2)
            ctx.vec_arith(ArithKind.MUL, vl)
            ctx.vec_arith(ArithKind.MACC, vl)
            ctx.scalar_op(2 * vl)
            ctx.vec_mem(MemKind.STORE_UNIT, vl, repeat=2)
    wr, wi = w.split_planes()
    return BeamWeights.from_polar(np.hypot(wr, wi), np.arctan2(wi, wr))
