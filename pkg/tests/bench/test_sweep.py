import logging
import re

import pytest

from src.bench.csv_io import emit_csv, parse_csv
from src.bench.speedup import speedup_table
from src.bench.svg_chart import emit_svg_chart
from src.bench.sweep import plan_points, records_by_group, run_sweep
from src.bench.workloads import ZfWorkload, make_workload, output_norm
from src.models.enum.kernel_name import KernelName
from src.models.schemas.bench_record import format_checksum
from src.models.schemas.sweep_spec import SweepSpec
from src.utils.errors import SingularMatrixError
from src.utils.logger import AppLogger, set_app_context


@pytest.fixture(scope="module")
def default_records():
    return run_sweep(SweepSpec())


def cycles_at(records, kernel, size, vlen, lanes):
    for r in records:
        if (r.kernel, r.size, r.vlen_bits, r.lanes) == (kernel, size, vlen, lanes):
            return r.cycles
    raise KeyError((kernel, size, vlen, lanes))


def test_no_kernels_means_no_records():
    assert run_sweep(SweepSpec(kernels=[])) == []


def test_plan_points_skips_invalid_presets():
    points, skipped = plan_points(SweepSpec(kernels=["zf"], sizes=[16]))
    assert len(points) == 15
    assert skipped == [(512, 16)]


def test_single_point_is_deterministic():
    spec = SweepSpec(kernels=["lse"], sizes=[16], vlens=[512], lanes=[2])
    first, second = run_sweep(spec, workers=1), run_sweep(spec, workers=1)
    assert len(first) == 1
    assert first == second
    assert first[0].cycles > 0


def test_threads_do_not_change_results():
    spec = SweepSpec(kernels=["zf", "fft"], sizes=[16], fft_sizes=[64], vlens=[512, 2048], lanes=[2, 8])
    assert run_sweep(spec, workers=1) == run_sweep(spec, workers=4)


def test_issue_overhead_raises_cycles():
    base = SweepSpec(kernels=["zf"], sizes=[16], vlens=[1024], lanes=[4])
    slow = SweepSpec(kernels=["zf"], sizes=[16], vlens=[1024], lanes=[4], issue_overhead=3)
    assert run_sweep(slow, workers=1)[0].cycles > run_sweep(base, workers=1)[0].cycles


def test_default_sweep_shape(default_records):
    assert len(default_records) == 165
    assert not any(r.failed for r in default_records)
    assert default_records == sorted(default_records, key=lambda r: r.sort_key)
    assert all(r.vector_instructions >= 1 for r in default_records)


def test_checksum_is_preset_independent(default_records):
    for (kernel, size), group in records_by_group(default_records).items():
        expected = format_checksum(output_norm(make_workload(kernel, size, 42).run_ref()))
        assert {r.checksum for r in group} == {expected}


def test_cycles_do_not_grow_with_vlen_or_lanes(default_records):
    for (kernel, size), group in records_by_group(default_records).items():
        cycles = {(r.vlen_bits, r.lanes): r.cycles for r in group}
        for (vlen, lanes), value in cycles.items():
            if (vlen * 2, lanes) in cycles:
                assert cycles[(vlen * 2, lanes)] <= value
            if (vlen, lanes * 2) in cycles:
                assert cycles[(vlen, lanes * 2)] <= value


@pytest.mark.parametrize("kernel,size", [
    (KernelName.LSE, 32),
    (KernelName.MMSE, 32),
    (KernelName.ZF, 32),
    (KernelName.BEAM, 32),
    (KernelName.FFT, 64),
    (KernelName.FFT, 1024),
])
def test_lanes_pay_off_at_wide_vectors(default_records, kernel, size):
    slow = cycles_at(default_records, kernel, size, 4096, 2)
    fast = cycles_at(default_records, kernel, size, 4096, 16)
    assert slow / fast >= 2


def test_every_preset_beats_the_baseline(default_records):
    for (kernel, size), group in records_by_group(default_records).items():
        baseline = cycles_at(group, kernel, size, 512, 2)
        assert all(r.cycles <= baseline for r in group)


def test_phases_are_recorded(default_records):
    mmse = [r for r in default_records if r.kernel == KernelName.MMSE]
    assert all(set(r.phases) == {"ls", "filter", "apply"} for r in mmse)
    for r in mmse:
        assert sum(p.total_cycles for p in r.phases.values()) == r.cycles


def test_default_sweep_speedups(default_records):
    assert all(row.speedup >= 1.0 for row in speedup_table(default_records, (512, 2)))


def test_default_sweep_csv_round_trip(default_records):
    text = emit_csv(default_records)
    assert len(text.splitlines()) == 1 + 165
    assert parse_csv(text) == default_records


def test_default_sweep_chart_follows_cycles(default_records):
    svg = emit_svg_chart(default_records)
    assert svg.count('class="panel"') == 5
    heights = {
        m.group(1): float(m.group(2))
        for m in re.finditer(r'<rect class="bar" id="bar-([\w-]+)"[^>]*height="([\d.]+)"', svg)
    }
    assert len(heights) == 165
    for kernel in KernelName:
        bars = sorted(
            (r.cycles, heights[f"{r.kernel.value}-{r.size}-{r.vlen_bits}-{r.lanes}"])
            for r in default_records if r.kernel == kernel
        )
        assert [h for _, h in bars] == sorted(h for _, h in bars)


def test_repeated_sweeps_are_byte_identical(default_records):
    again = run_sweep(SweepSpec())
    assert emit_csv(again) == emit_csv(default_records)
    assert emit_svg_chart(again) == emit_svg_chart(default_records)


def test_singular_point_fails_alone(monkeypatch):
    def singular(self, ctx):
        raise SingularMatrixError(1)

    monkeypatch.setattr(ZfWorkload, "run_vec", singular)
    spec = SweepSpec(kernels=["lse", "zf"], sizes=[16], vlens=[512], lanes=[2, 4])
    records = run_sweep(spec, workers=2)
    assert len(records) == 4
    assert [r.failed for r in records] == [False, False, True, True]
    rows = emit_csv(records).splitlines()[1:]
    assert rows[2:] == ["zf,16,512,2,0,0,0,0,FAILED", "zf,16,512,4,0,0,0,0,FAILED"]
    assert all(not row.endswith("FAILED") for row in rows[:2])


def test_phase_ranges_are_logged_at_info(caplog):
    spec = SweepSpec(kernels=["beam", "zf"], sizes=[16], vlens=[512, 1024], lanes=[2])
    with set_app_context(AppLogger.BENCH), caplog.at_level(logging.INFO, logger="bench"):
        records = run_sweep(spec, workers=1)
    summaries = [r.getMessage() for r in caplog.records if r.getMessage().startswith("Phases ")]
    assert summaries == [summaries[0]]
    assert summaries[0].startswith("Phases beam/16 across 2 presets: channel=")
    assert " weights=" in summaries[0]
    beam = [r for r in records if r.kernel == KernelName.BEAM]
    low = min(r.phases["channel"].total_cycles for r in beam)
    high = max(r.phases["channel"].total_cycles for r in beam)
    assert f"channel={low}..{high}" in summaries[0]
