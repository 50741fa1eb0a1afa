"""
Verification suite behind `lowphy-vec verify`.

For every selected kernel the suite runs, in order:
  1. its correctness properties (see src.verify.properties),
  2. one ledger determinism check at its first size,
  3. one ref/vec agreement check per (size, valid preset).

Matrix kernels use `sizes`; fft uses `fft_sizes`. With the defaults
(all kernels, sizes 16 and 32, fft lengths 16, 64, 256 and 1024, and the
15 valid presets of VLEN {512..4096} x lanes {2..16}) the suite holds
43 property checks, 5 determinism checks and 180 agreement checks,
228 in total; expected_check_count() computes the number for any selection.
"""
from typing import Iterable, List, Optional, Sequence

from pydantic import ValidationError

from src.config import DEFAULT_LANES, DEFAULT_SEED, DEFAULT_SIZES, DEFAULT_VLENS, VERIFY_FFT_SIZES
from src.machine.presets import preset_configs
from src.models.enum.kernel_name import KernelName
from src.models.schemas.vector_config import VectorConfig
from src.utils import app_string
from src.utils.check_format import CheckFormat
from src.utils.errors import LowPhyError
from src.utils.logger import get_current_logger
from src.utils.status import CheckStatus
from src.verify.agreement import agreement_checks, ledger_check
from src.verify.check import Check
from src.verify.properties import FIXED_CHECKS, PER_SIZE_CHECKS, PROPERTY_BUILDERS


def _ordered(kernels: Optional[Iterable[KernelName]]) -> List[KernelName]:
    selected = list(KernelName) if kernels is None else [KernelName(k) for k in kernels]
    return sorted(set(selected), key=lambda k: k.value)


def _sizes_for(kernel: KernelName, sizes: Sequence[int], fft_sizes: Sequence[int]) -> List[int]:
    return sorted(set(fft_sizes if kernel.uses_fft_sizes else sizes))


def plan_checks(kernels: Optional[Iterable[KernelName]] = None,
                sizes: Sequence[int] = DEFAULT_SIZES,
                fft_sizes: Sequence[int] = VERIFY_FFT_SIZES,
                seed: int = DEFAULT_SEED,
                presets: Optional[Sequence[VectorConfig]] = None) -> List[Check]:
    if presets is None:
        presets = preset_configs(DEFAULT_VLENS, DEFAULT_LANES)
    checks: List[Check] = []
    for kernel in _ordered(kernels):
        kernel_sizes = _sizes_for(kernel, sizes, fft_sizes)
        if not kernel_sizes:
            continue
        checks.extend(PROPERTY_BUILDERS[kernel](kernel_sizes, seed))
        checks.append(ledger_check(kernel, kernel_sizes[0], seed))
        for size in kernel_sizes:
            checks.extend(agreement_checks(kernel, size, seed, presets))
    return checks


def expected_check_count(kernels: Optional[Iterable[KernelName]] = None,
                         sizes: Sequence[int] = DEFAULT_SIZES,
                         fft_sizes: Sequence[int] = VERIFY_FFT_SIZES,
                         preset_count: int = 15) -> int:
    total = 0
    for kernel in _ordered(kernels):
        count = len(_sizes_for(kernel, sizes, fft_sizes))
        if count:
            total += FIXED_CHECKS[kernel] + 1 + count * (PER_SIZE_CHECKS[kernel] + preset_count)
    return total


def run_check(check: Check) -> CheckFormat:
    try:
        return check.run()
    except (LowPhyError, ValidationError, ArithmeticError) as e:
        return CheckFormat(status=CheckStatus.FAIL, message=check.name, data=f"{type(e).__name__}: {e}")


def run_checks(checks: Sequence[Check]) -> List[CheckFormat]:
    logger = get_current_logger()
    results = []
    for check in checks:
        result = run_check(check)
        if result.passed:
            logger.debug(result.to_line())
        else:
            logger.warning(result.to_line())
        results.append(result)
    passed = sum(1 for r in results if r.passed)
    logger.info(app_string.VERIFY_SUMMARY.format(passed=passed, total=len(results)))
    return results
