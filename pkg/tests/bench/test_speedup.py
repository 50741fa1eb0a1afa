import pytest

from src.bench.speedup import format_speedup_table, speedup_table
from src.models.enum.kernel_name import KernelName
from src.models.schemas.bench_record import BenchRecord
from src.models.schemas.cycle_ledger import CycleLedger
from src.utils.errors import MissingBaselineError


def record(vlen, lanes, cycles, kernel=KernelName.LSE, size=16):
    return BenchRecord.from_ledger(kernel, size, vlen, lanes, CycleLedger(total_cycles=cycles), "1.0")


def test_ratios_against_baseline():
    rows = speedup_table([record(512, 2, 1000), record(1024, 4, 500), record(2048, 8, 2000)], (512, 2))
    assert [row.speedup for row in rows] == [1.0, 2.0, 0.5]


def test_failed_points_are_left_out():
    records = [record(512, 2, 1000), BenchRecord.failure(KernelName.LSE, 16, 1024, 4)]
    assert len(speedup_table(records, (512, 2))) == 1


def test_missing_baseline_names_kernel_and_size():
    records = [record(512, 2, 1000), record(1024, 4, 500, kernel=KernelName.ZF, size=32)]
    with pytest.raises(MissingBaselineError) as e:
        speedup_table(records, (512, 2))
    assert (e.value.kernel, e.value.size) == ("zf", 32)
    assert "zf" in str(e.value) and "32" in str(e.value)


def test_failed_baseline_counts_as_missing():
    records = [BenchRecord.failure(KernelName.LSE, 16, 512, 2), record(1024, 4, 500)]
    with pytest.raises(MissingBaselineError):
        speedup_table(records, (512, 2))


def test_table_format():
    text = format_speedup_table(speedup_table([record(512, 2, 1000), record(4096, 16, 300)], (512, 2)))
    assert text.splitlines() == [
        "kernel  size  vlen_bits  lanes  speedup",
        "   lse    16        512      2     1.00",
        "   lse    16       4096     16     3.33",
    ]
