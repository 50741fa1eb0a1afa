import math
from concurrent.futures import ThreadPoolExecutor
from typing import Dict, List, Optional, Sequence, Tuple

from src.bench.workloads import BaseWorkload, make_workload, output_norm
from src.config import AGREEMENT_RTOL, SEW_BITS, SWEEP_WORKERS
from src.machine.presets import preset_pairs
from src.machine.vector_context import VectorContext
from src.models.enum.kernel_name import KernelName
from src.models.schemas.bench_record import BenchRecord, format_checksum
from src.models.schemas.sweep_spec import SweepSpec
from src.models.schemas.vector_config import VectorConfig
from src.utils import app_string
from src.utils.errors import LowPhyError
from src.utils.logger import get_current_logger
from src.utils.thread_context import map_with_context

SweepPoint = Tuple[BaseWorkload, Optional[float], int, int]


def plan_points(spec: SweepSpec) -> Tuple[List[Tuple[KernelName, int, int, int]], List[Tuple[int, int]]]:
    """Every (kernel, size, vlen, lanes) the sweep will run, plus skipped presets."""
    valid, skipped = preset_pairs(spec.vlens, spec.lanes)
    points = [
        (kernel, size, vlen, lanes)
        for kernel in spec.kernels
        for size in spec.sizes_for(kernel)
        for vlen, lanes in valid
    ]
    return points, skipped


def _reference_norm(workload: BaseWorkload) -> Optional[float]:
    try:
        return output_norm(workload.run_ref())
    except LowPhyError as e:
        get_current_logger().warning(f"Reference {workload.kernel.value}/{workload.size} failed: {e}")
        return None


def _run_point(spec: SweepSpec, point: SweepPoint) -> BenchRecord:
    logger = get_current_logger()
    workload, ref_norm, vlen, lanes = point
    kernel, size = workload.kernel, workload.size
    ctx = VectorContext(VectorConfig(
        vlen_bits=vlen,
        lanes=lanes,
        issue_overhead_cycles=spec.effective_issue_overhead,
        strided_mem_factor=spec.effective_strided_factor,
    ))
    try:
        output = workload.run_vec(ctx)
    except LowPhyError as e:
        logger.warning(app_string.SWEEP_POINT_FAILED.format(
            kernel=kernel.value, size=size, vlen=vlen, lanes=lanes, error=e
        ))
        return BenchRecord.failure(kernel, size, vlen, lanes)

    norm = output_norm(output)
    if ref_norm is None or not math.isclose(norm, ref_norm, rel_tol=AGREEMENT_RTOL):
        expected = "n/a" if ref_norm is None else format_checksum(ref_norm)
        logger.error(app_string.SWEEP_POINT_FAILED.format(
            kernel=kernel.value, size=size, vlen=vlen, lanes=lanes,
            error=app_string.CHECKSUM_MISMATCH.format(got=format_checksum(norm), expected=expected),
        ))
        return BenchRecord.failure(kernel, size, vlen, lanes)

    ledger = ctx.snapshot()
    for name, phase in ctx.phases.items():
        logger.debug(f"{kernel.value}/{size} vlen={vlen} lanes={lanes} phase {name}: {phase}")
    return BenchRecord.from_ledger(kernel, size, vlen, lanes, ledger, format_checksum(ref_norm), dict(ctx.phases))


def run_sweep(spec: SweepSpec, workers: int = SWEEP_WORKERS) -> List[BenchRecord]:
    """
    Run every valid (kernel, size, vlen, lanes) point of the sweep.

    Inputs are drawn once per (kernel, size) from the seed and shared by all
    machine configurations. Points run on a thread pool, one VectorContext
    each; records are sorted by (kernel, size, vlen, lanes) before returning.
    """
    logger = get_current_logger()
    valid, skipped = preset_pairs(spec.vlens, spec.lanes)
    for vlen, lanes in skipped:
        logger.warning(app_string.INVALID_PRESET.format(vlen=vlen, lanes=lanes, sew=SEW_BITS))

    points: List[SweepPoint] = []
    for kernel in spec.kernels:
        for size in spec.sizes_for(kernel):
            workload = make_workload(kernel, size, spec.seed)
            ref_norm = _reference_norm(workload)
            points.extend((workload, ref_norm, vlen, lanes) for vlen, lanes in valid)

    if workers > 1 and len(points) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = map_with_context(pool, lambda p: _run_point(spec, p), points)
    else:
        records = [_run_point(spec, p) for p in points]

    records.sort(key=lambda r: r.sort_key)
    _log_phase_summary(records)
    failures = sum(1 for r in records if r.failed)
    logger.info(app_string.SWEEP_COMPLETED.format(points=len(records), failures=failures, skipped=len(skipped)))
    return records


def records_by_group(records: Sequence[BenchRecord]) -> Dict[Tuple[KernelName, int], List[BenchRecord]]:
    """Group records by (kernel, size), keeping sweep order."""
    groups: Dict[Tuple[KernelName, int], List[BenchRecord]] = {}
    for record in records:
        groups.setdefault((record.kernel, record.size), []).append(record)
    return groups


def _log_phase_summary(records: Sequence[BenchRecord]) -> None:
    """One line per (kernel, size) with the cycle range of each named phase across presets."""
    logger = get_current_logger()
    for (kernel, size), group in records_by_group(records).items():
        measured = [r for r in group if r.phases]
        if not measured:
            continue
        names = list(measured[0].phases)
        ranges = []
        for name in names:
            cycles = [r.phases[name].total_cycles for r in measured if name in r.phases]
            ranges.append(f"{name}={min(cycles)}..{max(cycles)}")
        logger.info(app_string.PHASE_SUMMARY.format(
            kernel=kernel.value, size=size, presets=len(measured), phases=" ".join(ranges)
        ))
