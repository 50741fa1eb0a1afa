"""
Kernel correctness properties checked against the reference kernels.

Each builder returns a fixed set of closed-form checks plus a per-size set:

    lse   2 fixed + 1 per size    identity pilot, scalar pilot | round trip
    mmse  2 fixed + 2 per size    closed form, shrinkage | solve oracle, noiseless limit
    zf    2 fixed + 1 per size    identity, unitary | multiply-back
    fft   4 fixed + 4 per length  impulse, DC line, inverse of zeros, inverse of DC |
                                  DFT oracle, round trip, Parseval, linearity
    beam  3 fixed + 3 per size    broadside weights, endfire steering, conjugate pair |
                                  reconstruction, summation oracle, unit modulus
"""
import cmath
import math
from functools import partial
from typing import Callable, Dict, List, Sequence

import numpy as np

from src.bench.workloads import random_complex, random_matrix, random_pilot, random_steering_config
from src.config import MMSE_CORRELATION_RHO, MMSE_NOISE_VARIANCE
from src.kernels import (
    beam_weights_ref,
    build_steered_channel_ref,
    exponential_correlation,
    fft_radix4_ref,
    ifft_radix4_ref,
    lse_estimate_ref,
    make_fft_plan,
    mmse_estimate_ref,
    steering_vector_ref,
    zf_precoder_ref,
)
from src.linalg.complex_matrix import ComplexMatrix
from src.linalg.ops import frobenius_norm, hermitian_transpose, mat_mul, relative_error, relative_error_vector
from src.models.enum.kernel_name import KernelName
from src.models.schemas.channel_inputs import ChannelStats, Observation, PilotBlock
from src.models.schemas.steering import PropagationPath, SteeringArrayConfig, UserPaths
from src.verify.check import Check, within

EXACT_TOL = 1e-12
ROUND_TRIP_TOL = 1e-9
ORACLE_TOL = 1e-9
DEGENERATE_TOL = 1e-10
MULTIPLY_BACK_TOL = 1e-8
FIXED_FFT_SIZE = 16
BROADSIDE_ANTENNAS = 8
PAIR_ANGLE_RAD = 0.3

FIXED_CHECKS = {
    KernelName.LSE: 2,
    KernelName.MMSE: 2,
    KernelName.ZF: 2,
    KernelName.FFT: 4,
    KernelName.BEAM: 3,
}
PER_SIZE_CHECKS = {
    KernelName.LSE: 1,
    KernelName.MMSE: 2,
    KernelName.ZF: 1,
    KernelName.FFT: 4,
    KernelName.BEAM: 3,
}


def _rng(seed: int, kernel: KernelName, size: int, salt: int) -> np.random.Generator:
    # salt keeps the property streams apart from the bench workload streams
    return np.random.default_rng([seed, list(KernelName).index(kernel), size, 1000 + salt])


def _bounded(name: str, tol: float, measure: Callable[[], float]) -> Check:
    return Check(name, lambda: within(name, measure(), tol))


def _random_unitary(rng: np.random.Generator, n: int) -> ComplexMatrix:
    q, _ = np.linalg.qr(random_complex(rng, n, n))
    return ComplexMatrix(q)


# --------------------------------------------------------------------- LSE

def _lse_identity_pilot(n: int, seed: int) -> float:
    y = random_matrix(_rng(seed, KernelName.LSE, n, 0), n, n)
    h = lse_estimate_ref(Observation(y=y), PilotBlock(x=ComplexMatrix.identity(n)))
    return relative_error(h, y)


def _lse_scalar_pilot(n: int, seed: int) -> float:
    h0 = random_matrix(_rng(seed, KernelName.LSE, n, 1), n, n)
    x = PilotBlock(x=ComplexMatrix(2.0 * np.eye(n)))
    h = lse_estimate_ref(Observation(y=ComplexMatrix(2.0 * h0.array)), x)
    return relative_error(h, h0)


def _lse_round_trip(n: int, seed: int) -> float:
    rng = _rng(seed, KernelName.LSE, n, 2)
    h0 = random_matrix(rng, n, n)
    x = random_pilot(rng, n)
    h = lse_estimate_ref(Observation(y=mat_mul(h0, x.x)), x)
    return relative_error(h, h0)


def lse_checks(sizes: Sequence[int], seed: int) -> List[Check]:
    n0 = sizes[0]
    checks = [
        _bounded(f"lse/{n0} identity pilot", EXACT_TOL, partial(_lse_identity_pilot, n0, seed)),
        _bounded(f"lse/{n0} scalar pilot", EXACT_TOL, partial(_lse_scalar_pilot, n0, seed)),
    ]
    for n in sizes:
        checks.append(_bounded(f"lse/{n} round trip", ROUND_TRIP_TOL, partial(_lse_round_trip, n, seed)))
    return checks


# -------------------------------------------------------------------- MMSE

def _mmse_closed_form(n: int, seed: int) -> float:
    y = random_matrix(_rng(seed, KernelName.MMSE, n, 0), n, n)
    identity = ComplexMatrix.identity(n)
    h = mmse_estimate_ref(Observation(y=y), PilotBlock(x=identity), ChannelStats(r_h=identity, sigma2=1.0))
    return relative_error(h, ComplexMatrix(y.array / 2.0))


def _mmse_shrinkage(n: int, seed: int) -> float:
    rng = _rng(seed, KernelName.MMSE, n, 1)
    x = PilotBlock(x=_random_unitary(rng, n))
    y = Observation(y=random_matrix(rng, n, n))
    stats = ChannelStats(r_h=ComplexMatrix.identity(n), sigma2=MMSE_NOISE_VARIANCE)
    expected = frobenius_norm(lse_estimate_ref(y, x)) / (1.0 + MMSE_NOISE_VARIANCE)
    return abs(frobenius_norm(mmse_estimate_ref(y, x, stats)) - expected) / expected


def _mmse_solve_oracle(n: int, seed: int) -> float:
    rng = _rng(seed, KernelName.MMSE, n, 2)
    x = random_pilot(rng, n)
    y = random_matrix(rng, n, n)
    r_h = exponential_correlation(n, MMSE_CORRELATION_RHO)
    got = mmse_estimate_ref(Observation(y=y), x, ChannelStats(r_h=r_h, sigma2=MMSE_NOISE_VARIANCE))

    xa, ya, ra = x.x.to_numpy(), y.to_numpy(), r_h.to_numpy()
    h_ls = np.linalg.solve(xa.T, ya.T).T
    regularised = ra + MMSE_NOISE_VARIANCE * np.linalg.inv(xa @ xa.conj().T)
    m = np.linalg.solve(regularised, ra)
    return relative_error(got, ComplexMatrix(h_ls @ m))


def _mmse_noiseless(n: int, seed: int) -> float:
    rng = _rng(seed, KernelName.MMSE, n, 3)
    x = random_pilot(rng, n)
    y = Observation(y=random_matrix(rng, n, n))
    stats = ChannelStats(r_h=exponential_correlation(n, MMSE_CORRELATION_RHO), sigma2=0.0)
    return relative_error(mmse_estimate_ref(y, x, stats), lse_estimate_ref(y, x))


def mmse_checks(sizes: Sequence[int], seed: int) -> List[Check]:
    n0 = sizes[0]
    checks = [
        _bounded(f"mmse/{n0} closed form", EXACT_TOL, partial(_mmse_closed_form, n0, seed)),
        _bounded(f"mmse/{n0} shrinkage", DEGENERATE_TOL, partial(_mmse_shrinkage, n0, seed)),
    ]
    for n in sizes:
        checks.append(_bounded(f"mmse/{n} solve oracle", ORACLE_TOL, partial(_mmse_solve_oracle, n, seed)))
        checks.append(_bounded(f"mmse/{n} noiseless limit", DEGENERATE_TOL, partial(_mmse_noiseless, n, seed)))
    return checks


# ---------------------------------------------------------------------- ZF

def _zf_identity(n: int) -> float:
    identity = ComplexMatrix.identity(n)
    return relative_error(zf_precoder_ref(identity), identity)


def _zf_unitary(n: int, seed: int) -> float:
    h = _random_unitary(_rng(seed, KernelName.ZF, n, 0), n)
    return relative_error(zf_precoder_ref(h), hermitian_transpose(h))


def _zf_multiply_back(n: int, seed: int) -> float:
    h = random_matrix(_rng(seed, KernelName.ZF, n, 1), n, 2 * n)
    hw = mat_mul(h, zf_precoder_ref(h))
    return float(np.linalg.norm(hw.array - np.eye(n)))


def zf_checks(sizes: Sequence[int], seed: int) -> List[Check]:
    n0 = sizes[0]
    checks = [
        _bounded(f"zf/{n0} identity channel", EXACT_TOL, partial(_zf_identity, n0)),
        _bounded(f"zf/{n0} unitary channel", ROUND_TRIP_TOL, partial(_zf_unitary, n0, seed)),
    ]
    for n in sizes:
        checks.append(_bounded(f"zf/{n}x{2 * n} multiply-back", MULTIPLY_BACK_TOL, partial(_zf_multiply_back, n, seed)))
    return checks


# --------------------------------------------------------------------- FFT

def naive_dft(x: np.ndarray) -> np.ndarray:
    """O(N^2) DFT sum with exponents reduced mod N."""
    n = x.shape[0]
    k = np.arange(n)
    return np.exp(-2j * np.pi * (np.outer(k, k) % n) / n) @ x


def _random_signal(rng: np.random.Generator, n: int) -> np.ndarray:
    return random_complex(rng, 1, n)[0]


def _fft_impulse(n: int) -> float:
    x = np.zeros(n, dtype=np.complex128)
    x[0] = 1.0
    return relative_error_vector(fft_radix4_ref(make_fft_plan(n), x), np.ones(n))


def _fft_dc_line(n: int) -> float:
    expected = np.zeros(n, dtype=np.complex128)
    expected[0] = n
    return relative_error_vector(fft_radix4_ref(make_fft_plan(n), np.ones(n)), expected)


def _ifft_zeros(n: int) -> float:
    zeros = np.zeros(n, dtype=np.complex128)
    return relative_error_vector(ifft_radix4_ref(make_fft_plan(n), zeros), zeros)


def _ifft_dc_line(n: int) -> float:
    spectrum = np.zeros(n, dtype=np.complex128)
    spectrum[0] = n
    return relative_error_vector(ifft_radix4_ref(make_fft_plan(n), spectrum), np.ones(n))


def _fft_dft_oracle(n: int, seed: int) -> float:
    x = _random_signal(_rng(seed, KernelName.FFT, n, 0), n)
    return relative_error_vector(fft_radix4_ref(make_fft_plan(n), x), naive_dft(x))


def _fft_round_trip(n: int, seed: int) -> float:
    plan = make_fft_plan(n)
    x = _random_signal(_rng(seed, KernelName.FFT, n, 1), n)
    return relative_error_vector(ifft_radix4_ref(plan, fft_radix4_ref(plan, x)), x)


def _fft_parseval(n: int, seed: int) -> float:
    x = _random_signal(_rng(seed, KernelName.FFT, n, 2), n)
    spectrum_energy = float(np.sum(np.abs(fft_radix4_ref(make_fft_plan(n), x)) ** 2))
    signal_energy = n * float(np.sum(np.abs(x) ** 2))
    return abs(spectrum_energy - signal_energy) / signal_energy


def _fft_linearity(n: int, seed: int) -> float:
    rng = _rng(seed, KernelName.FFT, n, 3)
    plan = make_fft_plan(n)
    x, y = _random_signal(rng, n), _random_signal(rng, n)
    alpha, beta = _random_signal(rng, 2)
    combined = fft_radix4_ref(plan, alpha * x + beta * y)
    return relative_error_vector(combined, alpha * fft_radix4_ref(plan, x) + beta * fft_radix4_ref(plan, y))


def fft_checks(fft_sizes: Sequence[int], seed: int) -> List[Check]:
    n0 = FIXED_FFT_SIZE
    checks = [
        _bounded(f"fft/{n0} impulse", EXACT_TOL, partial(_fft_impulse, n0)),
        _bounded(f"fft/{n0} dc line", EXACT_TOL, partial(_fft_dc_line, n0)),
        _bounded(f"ifft/{n0} zeros", EXACT_TOL, partial(_ifft_zeros, n0)),
        _bounded(f"ifft/{n0} dc line", EXACT_TOL, partial(_ifft_dc_line, n0)),
    ]
    for n in fft_sizes:
        checks.append(_bounded(f"fft/{n} dft oracle", ORACLE_TOL, partial(_fft_dft_oracle, n, seed)))
        checks.append(_bounded(f"fft/{n} round trip", ROUND_TRIP_TOL, partial(_fft_round_trip, n, seed)))
        checks.append(_bounded(f"fft/{n} parseval", ROUND_TRIP_TOL, partial(_fft_parseval, n, seed)))
        checks.append(_bounded(f"fft/{n} linearity", ROUND_TRIP_TOL, partial(_fft_linearity, n, seed)))
    return checks


# -------------------------------------------------------------------- beam

def _single_user(antennas: int, *paths: PropagationPath) -> SteeringArrayConfig:
    return SteeringArrayConfig(num_antennas=antennas, spacing_wavelengths=0.5, users=[UserPaths(paths=list(paths))])


def _beam_broadside() -> float:
    cfg = _single_user(BROADSIDE_ANTENNAS, PropagationPath(angle_rad=0.0, gain=1 + 0j))
    weights = beam_weights_ref(build_steered_channel_ref(cfg))
    return max(
        abs(w.amplitude - 1.0 / BROADSIDE_ANTENNAS) + abs(w.phase_rad)
        for w in weights.users[0]
    )


def _steering_endfire() -> float:
    return relative_error_vector(steering_vector_ref(4, 0.5, math.pi / 2), np.array([1, -1, 1, -1]))


def _conjugate_pair() -> float:
    m = BROADSIDE_ANTENNAS
    cfg = _single_user(
        m,
        PropagationPath(angle_rad=PAIR_ANGLE_RAD, gain=1 + 0j),
        PropagationPath(angle_rad=-PAIR_ANGLE_RAD, gain=1 + 0j),
    )
    row = build_steered_channel_ref(cfg).array[0]
    expected = 2.0 * np.cos(np.pi * np.arange(m) * math.sin(PAIR_ANGLE_RAD))
    return relative_error_vector(row, expected)


def _beam_reconstruction(n: int, seed: int) -> float:
    cfg = random_steering_config(_rng(seed, KernelName.BEAM, n, 0), n, 2)
    h = build_steered_channel_ref(cfg)
    rebuilt = beam_weights_ref(h).to_matrix()
    return float(np.linalg.norm(mat_mul(h, rebuilt).array - np.eye(cfg.num_users)))


def _summation_oracle(n: int, seed: int) -> float:
    cfg = random_steering_config(_rng(seed, KernelName.BEAM, n, 1), n, max(1, n // 2))
    expected = np.zeros((cfg.num_users, n), dtype=np.complex128)
    for u, user in enumerate(cfg.users):
        for m in range(n):
            expected[u, m] = sum(
                p.gain * cmath.exp(-2j * math.pi * cfg.spacing_wavelengths * m * math.sin(p.angle_rad))
                for p in user.paths
            )
    return relative_error(build_steered_channel_ref(cfg), ComplexMatrix(expected))


def _unit_modulus(n: int, seed: int) -> float:
    cfg = random_steering_config(_rng(seed, KernelName.BEAM, n, 2), n, max(1, n // 2))
    worst = 0.0
    for user in cfg.users:
        for path in user.paths:
            a = steering_vector_ref(n, cfg.spacing_wavelengths, path.angle_rad)
            worst = max(worst, float(np.max(np.abs(np.abs(a) - 1.0))))
    return worst


def beam_checks(sizes: Sequence[int], seed: int) -> List[Check]:
    checks = [
        _bounded(f"beam/{BROADSIDE_ANTENNAS} broadside weights", EXACT_TOL, _beam_broadside),
        _bounded("steering/4 endfire", EXACT_TOL, _steering_endfire),
        _bounded(f"channel/{BROADSIDE_ANTENNAS} conjugate pair", EXACT_TOL, _conjugate_pair),
    ]
    for n in sizes:
        checks.append(_bounded(f"beam/{n} reconstruction", MULTIPLY_BACK_TOL, partial(_beam_reconstruction, n, seed)))
        checks.append(_bounded(f"channel/{n} summation oracle", EXACT_TOL, partial(_summation_oracle, n, seed)))
        checks.append(_bounded(f"steering/{n} unit modulus", EXACT_TOL, partial(_unit_modulus, n, seed)))
    return checks


PROPERTY_BUILDERS: Dict[KernelName, Callable[[Sequence[int], int], List[Check]]] = {
    KernelName.LSE: lse_checks,
    KernelName.MMSE: mmse_checks,
    KernelName.ZF: zf_checks,
    KernelName.FFT: fft_checks,
    KernelName.BEAM: beam_checks,
}
