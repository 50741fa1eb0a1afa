import pytest

from src.models.enum.kernel_name import KernelName
from src.verify.properties import FIXED_CHECKS, PER_SIZE_CHECKS, PROPERTY_BUILDERS
from src.verify.suite import run_checks


@pytest.mark.parametrize("seed", [1, 42, 1337])
@pytest.mark.parametrize("kernel", list(KernelName))
def test_properties_hold_across_seeds(kernel, seed):
    sizes = [16, 64, 256, 1024] if kernel.uses_fft_sizes else [16, 32]
    checks = PROPERTY_BUILDERS[kernel](sizes, seed)
    assert len(checks) == FIXED_CHECKS[kernel] + len(sizes) * PER_SIZE_CHECKS[kernel]
    results = run_checks(checks)
    assert all(r.passed for r in results), [r.to_line() for r in results if not r.passed]
