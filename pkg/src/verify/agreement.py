from functools import lru_cache, partial
from typing import Any, Callable, List, Sequence

import numpy as np

from src.bench.workloads import BaseWorkload, make_workload
from src.config import AGREEMENT_RTOL
from src.linalg.complex_matrix import ComplexMatrix
from src.linalg.ops import relative_error_vector
from src.machine.presets import new_context
from src.machine.vector_context import VectorContext
from src.models.enum.kernel_name import KernelName
from src.models.schemas.steering import BeamWeights
from src.models.schemas.vector_config import VectorConfig
from src.utils.check_format import CheckFormat
from src.verify.check import Check, holds, within

DETERMINISM_PRESET = (1024, 4)


def as_array(output: Any) -> np.ndarray:
    if isinstance(output, ComplexMatrix):
        return output.to_numpy()
    if isinstance(output, BeamWeights):
        return output.to_matrix().to_numpy()
    return np.asarray(output, dtype=np.complex128)


def _agreement(name: str, workload: BaseWorkload, reference: Callable[[], np.ndarray],
               config: VectorConfig) -> CheckFormat:
    output = as_array(workload.run_vec(VectorContext(config)))
    return within(name, relative_error_vector(output.ravel(), reference().ravel()), AGREEMENT_RTOL)


def agreement_checks(kernel: KernelName, size: int, seed: int, presets: Sequence[VectorConfig]) -> List[Check]:
    """One ref/vec agreement check per preset; the reference output is computed once and shared."""
    workload = make_workload(kernel, size, seed)
    reference = lru_cache(maxsize=1)(lambda: as_array(workload.run_ref()))
    checks = []
    for config in presets:
        name = f"{kernel.value}/{size} agreement {config.label()}"
        checks.append(Check(name, partial(_agreement, name, workload, reference, config)))
    return checks


def _ledger_determinism(name: str, kernel: KernelName, size: int, seed: int) -> CheckFormat:
    vlen, lanes = DETERMINISM_PRESET
    workload = make_workload(kernel, size, seed)
    ledgers = []
    for _ in range(2):
        ctx = new_context(vlen, lanes)
        workload.run_vec(ctx)
        ledgers.append(ctx.snapshot())
    first, second = ledgers
    return holds(name, first == second and first.vector_instructions >= 1, str(first))


def ledger_check(kernel: KernelName, size: int, seed: int) -> Check:
    name = f"{kernel.value}/{size} ledger determinism"
    return Check(name, partial(_ledger_determinism, name, kernel, size, seed))
