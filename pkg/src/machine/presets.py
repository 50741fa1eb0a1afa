from typing import Iterable, List, Tuple

from src.config import DEFAULT_LANES, DEFAULT_VLENS, ISSUE_OVERHEAD_CYCLES, STRIDED_MEM_FACTOR
from src.machine.vector_context import VectorContext
from src.models.schemas.vector_config import VectorConfig


def preset_pairs(vlens: Iterable[int] = DEFAULT_VLENS,
                 lanes: Iterable[int] = DEFAULT_LANES) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """Split the (vlen, lanes) grid into valid and skipped pairs, both sorted."""
    valid, skipped = [], []
    for vlen in sorted(set(vlens)):
        for lane_count in sorted(set(lanes)):
            target = valid if VectorConfig.is_valid_pair(vlen, lane_count) else skipped
            target.append((vlen, lane_count))
    return valid, skipped


def preset_configs(vlens: Iterable[int] = DEFAULT_VLENS,
                   lanes: Iterable[int] = DEFAULT_LANES,
                   issue_overhead: int = ISSUE_OVERHEAD_CYCLES,
                   strided_factor: int = STRIDED_MEM_FACTOR) -> List[VectorConfig]:
    valid, _ = preset_pairs(vlens, lanes)
    return [
        VectorConfig(
            vlen_bits=vlen,
            lanes=lane_count,
            issue_overhead_cycles=issue_overhead,
            strided_mem_factor=strided_factor,
        )
        for vlen, lane_count in valid
    ]


def new_context(vlen_bits: int, lanes: int, **overrides) -> VectorContext:
    return VectorContext(VectorConfig(vlen_bits=vlen_bits, lanes=lanes, **overrides))
