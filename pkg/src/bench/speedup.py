from typing import Dict, List, NamedTuple, Sequence, Tuple

from src.models.enum.kernel_name import KernelName
from src.models.schemas.bench_record import BenchRecord
from src.utils.errors import MissingBaselineError


class SpeedupRow(NamedTuple):
    kernel: KernelName
    size: int
    vlen_bits: int
    lanes: int
    speedup: float


def speedup_table(records: Sequence[BenchRecord], baseline: Tuple[int, int]) -> List[SpeedupRow]:
    """
    cycles(baseline) / cycles(point) for every record, per kernel/size.

    Failed points (no cycle count) are left out. Raises MissingBaselineError
    naming the first kernel/size whose baseline record is absent or failed.
    """
    base_vlen, base_lanes = baseline
    baselines: Dict[Tuple[KernelName, int], int] = {}
    for record in records:
        if (record.vlen_bits, record.lanes) == (base_vlen, base_lanes) and not record.failed:
            baselines[(record.kernel, record.size)] = record.cycles

    rows: List[SpeedupRow] = []
    for record in sorted(records, key=lambda r: r.sort_key):
        key = (record.kernel, record.size)
        if key not in baselines or baselines[key] <= 0:
            raise MissingBaselineError(record.kernel.value, record.size, base_vlen, base_lanes)
        if record.failed or record.cycles <= 0:
            continue
        rows.append(SpeedupRow(record.kernel, record.size, record.vlen_bits, record.lanes,
                               baselines[key] / record.cycles))
    return rows


def format_speedup_table(rows: Sequence[SpeedupRow]) -> str:
    """Right-aligned text table, speedups with two decimals."""
    header = ("kernel", "size", "vlen_bits", "lanes", "speedup")
    body = [
        (row.kernel.value, str(row.size), str(row.vlen_bits), str(row.lanes), f"{row.speedup:.2f}")
        for row in rows
    ]
    widths = [max(len(cells[i]) for cells in [header, *body]) for i in range(len(header))]
    lines = [
        "  ".join(cell.rjust(width) for cell, width in zip(cells, widths)).rstrip()
        for cells in [header, *body]
    ]
    return "\n".join(lines) + "\n"
