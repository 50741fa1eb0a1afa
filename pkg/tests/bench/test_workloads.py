import numpy as np
import pytest

from src.bench.workloads import make_rng, make_workload, output_norm
from src.kernels import lse_estimate_ref
from src.linalg import ComplexMatrix, relative_error
from src.machine.presets import new_context
from src.models.enum.kernel_name import KernelName

SIZES = {
    KernelName.LSE: 16,
    KernelName.MMSE: 16,
    KernelName.ZF: 16,
    KernelName.BEAM: 16,
    KernelName.FFT: 64,
}


def test_inputs_are_seeded():
    first = make_workload(KernelName.ZF, 16, 7).inputs["h"]
    assert make_workload(KernelName.ZF, 16, 7).inputs["h"] == first
    assert make_workload(KernelName.ZF, 16, 8).inputs["h"] != first


def test_streams_differ_per_kernel_and_size():
    a = make_rng(42, KernelName.LSE, 16).uniform(size=4)
    b = make_rng(42, KernelName.MMSE, 16).uniform(size=4)
    c = make_rng(42, KernelName.LSE, 32).uniform(size=4)
    assert not np.array_equal(a, b)
    assert not np.array_equal(a, c)


def test_lse_workload_recovers_the_channel():
    workload = make_workload(KernelName.LSE, 16, 42)
    assert relative_error(workload.run_ref(), workload.inputs["h0"]) < 1e-9
    assert relative_error(lse_estimate_ref(workload.inputs["y"], workload.inputs["x"]),
                          workload.inputs["h0"]) < 1e-9


def test_beam_workload_shape():
    cfg = make_workload(KernelName.BEAM, 16, 42).inputs["cfg"]
    assert cfg.num_antennas == 16
    assert cfg.num_users == 8
    assert all(len(user.paths) == 3 for user in cfg.users)


@pytest.mark.parametrize("kernel", list(KernelName))
def test_vec_matches_ref_for_every_workload(kernel):
    workload = make_workload(kernel, SIZES[kernel], 42)
    ref, vec = workload.run_ref(), workload.run_vec(new_context(1024, 4))
    assert output_norm(vec) == pytest.approx(output_norm(ref), rel=1e-9)


def test_beam_workload_records_phases():
    ctx = new_context(2048, 8)
    make_workload(KernelName.BEAM, 16, 42).run_vec(ctx)
    assert set(ctx.phases) == {"channel", "weights"}


def test_output_norm():
    assert output_norm(ComplexMatrix([[3, 4j]])) == pytest.approx(5.0)
    assert output_norm(np.array([3, 4j])) == pytest.approx(5.0)
