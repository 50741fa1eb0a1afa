"""
Per-kernel benchmark workloads.

A workload draws its inputs deterministically from (seed, kernel, size), so
every machine configuration of one kernel/size sees identical inputs, and
knows how to run the reference and vectorised kernels and checksum their
output.

Input construction:
  - matrix entries: re and im uniform in [-1, 1]
  - pilots: random + PILOT_DIAGONAL_LOAD * I (diagonal dominance)
  - mmse: R_H = exponential correlation, sigma2 = MMSE_NOISE_VARIANCE
  - beam: size antennas, size / 2 users, BEAM_PATHS_PER_USER paths each
"""
from abc import ABC, abstractmethod
from typing import Any, Dict

import numpy as np

from src.config import (
    BEAM_PATHS_PER_USER,
    MMSE_CORRELATION_RHO,
    MMSE_NOISE_VARIANCE,
    PILOT_DIAGONAL_LOAD,
    STEERING_SPACING_WAVELENGTHS,
)
from src.kernels import (
    beam_weights_ref,
    beam_weights_vec,
    build_steered_channel_ref,
    build_steered_channel_vec,
    exponential_correlation,
    fft_radix4_ref,
    fft_radix4_vec,
    lse_estimate_ref,
    lse_estimate_vec,
    make_fft_plan,
    mmse_estimate_ref,
    mmse_estimate_vec,
    zf_precoder_ref,
    zf_precoder_vec,
)
from src.linalg.complex_matrix import ComplexMatrix
from src.linalg.ops import frobenius_norm, mat_mul
from src.machine.vector_context import VectorContext
from src.models.enum.kernel_name import KernelName
from src.models.schemas.channel_inputs import ChannelStats, Observation, PilotBlock
from src.models.schemas.steering import BeamWeights, PropagationPath, SteeringArrayConfig, UserPaths


def make_rng(seed: int, kernel: KernelName, size: int) -> np.random.Generator:
    kernel_index = list(KernelName).index(kernel)
    return np.random.default_rng([seed, kernel_index, size])


def random_complex(rng: np.random.Generator, rows: int, cols: int) -> np.ndarray:
    return rng.uniform(-1.0, 1.0, (rows, cols)) + 1j * rng.uniform(-1.0, 1.0, (rows, cols))


def random_matrix(rng: np.random.Generator, rows: int, cols: int) -> ComplexMatrix:
    return ComplexMatrix(random_complex(rng, rows, cols))


def random_pilot(rng: np.random.Generator, n: int) -> PilotBlock:
    return PilotBlock(x=ComplexMatrix(random_complex(rng, n, n) + PILOT_DIAGONAL_LOAD * np.eye(n)))


def random_steering_config(rng: np.random.Generator, antennas: int, users: int,
                           paths: int = BEAM_PATHS_PER_USER) -> SteeringArrayConfig:
    user_paths = []
    for _ in range(users):
        angles = rng.uniform(-np.pi / 2, np.pi / 2, paths)
        gains = rng.uniform(-1.0, 1.0, paths) + 1j * rng.uniform(-1.0, 1.0, paths)
        user_paths.append(UserPaths(paths=[
            PropagationPath(angle_rad=float(a), gain=complex(g)) for a, g in zip(angles, gains)
        ]))
    return SteeringArrayConfig(
        num_antennas=antennas,
        spacing_wavelengths=STEERING_SPACING_WAVELENGTHS,
        users=user_paths,
    )


def output_norm(output: Any) -> float:
    """Frobenius / l2 norm of any kernel output."""
    if isinstance(output, ComplexMatrix):
        return frobenius_norm(output)
    if isinstance(output, BeamWeights):
        return frobenius_norm(output.to_matrix())
    return float(np.linalg.norm(np.asarray(output)))


class BaseWorkload(ABC):
    kernel: KernelName

    def __init__(self, size: int, seed: int):
        self.size = size
        self.seed = seed
        self.inputs: Dict[str, Any] = self.prepare(make_rng(seed, self.kernel, size))

    @abstractmethod
    def prepare(self, rng: np.random.Generator) -> Dict[str, Any]:
        """Draw the kernel inputs."""

    @abstractmethod
    def run_ref(self) -> Any:
        ...

    @abstractmethod
    def run_vec(self, ctx: VectorContext) -> Any:
        ...


class LseWorkload(BaseWorkload):
    kernel = KernelName.LSE

    def prepare(self, rng):
        h0 = random_matrix(rng, self.size, self.size)
        x = random_pilot(rng, self.size)
        return {"h0": h0, "x": x, "y": Observation(y=mat_mul(h0, x.x))}

    def run_ref(self):
        return lse_estimate_ref(self.inputs["y"], self.inputs["x"])

    def run_vec(self, ctx):
        return lse_estimate_vec(ctx, self.inputs["y"], self.inputs["x"])


class MmseWorkload(BaseWorkload):
    kernel = KernelName.MMSE

    def prepare(self, rng):
        h0 = random_matrix(rng, self.size, self.size)
        x = random_pilot(rng, self.size)
        noise = np.sqrt(MMSE_NOISE_VARIANCE / 2.0) * random_complex(rng, self.size, self.size)
        y = Observation(y=ComplexMatrix(mat_mul(h0, x.x).array + noise))
        stats = ChannelStats(
            r_h=exponential_correlation(self.size, MMSE_CORRELATION_RHO),
            sigma2=MMSE_NOISE_VARIANCE,
        )
        return {"h0": h0, "x": x, "y": y, "stats": stats}

    def run_ref(self):
        return mmse_estimate_ref(self.inputs["y"], self.inputs["x"], self.inputs["stats"])

    def run_vec(self, ctx):
        return mmse_estimate_vec(ctx, self.inputs["y"], self.inputs["x"], self.inputs["stats"])


class FftWorkload(BaseWorkload):
    kernel = KernelName.FFT

    def prepare(self, rng):
        samples = rng.uniform(-1.0, 1.0, self.size) + 1j * rng.uniform(-1.0, 1.0, self.size)
        return {"plan": make_fft_plan(self.size), "x": samples}

    def run_ref(self):
        return fft_radix4_ref(self.inputs["plan"], self.inputs["x"])

    def run_vec(self, ctx):
        return fft_radix4_vec(ctx, self.inputs["plan"], self.inputs["x"])


class ZfWorkload(BaseWorkload):
    kernel = KernelName.ZF

    def prepare(self, rng):
        return {"h": random_matrix(rng, self.size, self.size)}

    def run_ref(self):
        return zf_precoder_ref(self.inputs["h"])

    def run_vec(self, ctx):
        return zf_precoder_vec(ctx, self.inputs["h"])


class BeamWorkload(BaseWorkload):
    """Channel construction and weight computation, measured together."""
    kernel = KernelName.BEAM

    def prepare(self, rng):
        users = max(1, self.size // 2)
        return {"cfg": random_steering_config(rng, self.size, users)}

    def run_ref(self):
        return beam_weights_ref(build_steered_channel_ref(self.inputs["cfg"]))

    def run_vec(self, ctx):
        with ctx.phase("channel"):
            h = build_steered_channel_vec(ctx, self.inputs["cfg"])
        with ctx.phase("weights"):
            return beam_weights_vec(ctx, h)


WORKLOADS = {
    KernelName.LSE: LseWorkload,
    KernelName.MMSE: MmseWorkload,
    KernelName.FFT: FftWorkload,
    KernelName.ZF: ZfWorkload,
    KernelName.BEAM: BeamWorkload,
}


def make_workload(kernel: KernelName, size: int, seed: int) -> BaseWorkload:
    return WORKLOADS[KernelName(kernel)](size, seed)
