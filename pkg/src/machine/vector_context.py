"""
Abstract vector execution model.

A VectorContext charges every issued instruction against a cycle ledger using
a throughput-only cost model: one element per lane per cycle plus a fixed
issue overhead per instruction. There are no dependency stalls, chaining or
memory hierarchy effects. Register grouping is fixed at one, so
vlmax = vlen_bits / sew_bits.

A context is single-threaded; use one context per kernel invocation.
"""
from contextlib import contextmanager
from typing import Dict, Iterator

from src.models.enum.arith_kind import ArithKind
from src.models.enum.mem_kind import MemKind
from src.models.schemas.cycle_ledger import CycleLedger
from src.models.schemas.vector_config import VectorConfig
from src.utils import app_string
from src.utils.errors import ContractViolationError


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


class VectorContext:
    def __init__(self, config: VectorConfig):
        self.config = config
        self.vlmax = config.vlmax
        self._lanes = config.lanes
        self._overhead = config.issue_overhead_cycles
        self._tree_depth = (config.lanes - 1).bit_length()  # ceil(log2(lanes))
        self._total_cycles = 0
        self._vector_instructions = 0
        self._scalar_instructions = 0
        self._vector_element_ops = 0
        self.phases: Dict[str, CycleLedger] = {}

    @property
    def ledger(self) -> CycleLedger:
        return self.snapshot()

    def snapshot(self) -> CycleLedger:
        """Copy of the current counters; the context is left untouched."""
        return CycleLedger(
            total_cycles=self._total_cycles,
            vector_instructions=self._vector_instructions,
            scalar_instructions=self._scalar_instructions,
            vector_element_ops=self._vector_element_ops,
        )

    # ------------------------------------------------------------ contract

    def _check_vl(self, vl: int) -> None:
        if vl < 0:
            raise ContractViolationError(app_string.NEGATIVE_COUNT.format(value=vl))
        if vl > self.vlmax:
            raise ContractViolationError(app_string.VL_EXCEEDS_VLMAX.format(vl=vl, vlmax=self.vlmax))

    def _charge_vector(self, cost: int, vl: int, repeat: int) -> int:
        if repeat < 0:
            raise ContractViolationError(app_string.NEGATIVE_COUNT.format(value=repeat))
        if vl == 0 or repeat == 0:
            return 0
        self._total_cycles += cost * repeat
        self._vector_instructions += repeat
        self._vector_element_ops += vl * repeat
        return cost * repeat

    # ---------------------------------------------------------- operations

    def set_vl(self, requested: int) -> int:
        """Grant min(requested, vlmax) elements; costs one scalar instruction."""
        if requested < 0:
            raise ContractViolationError(app_string.NEGATIVE_COUNT.format(value=requested))
        self._total_cycles += 1
        self._scalar_instructions += 1
        return min(requested, self.vlmax)

    def vec_arith(self, kind: ArithKind, vl: int, repeat: int = 1) -> int:
        """Charge `repeat` arithmetic instructions of length vl; returns cycles accrued."""
        ArithKind(kind)
        self._check_vl(vl)
        cost = self._overhead + _ceil_div(vl, self._lanes)
        return self._charge_vector(cost, vl, repeat)

    def vec_mem(self, kind: MemKind, vl: int, repeat: int = 1) -> int:
        kind = MemKind(kind)
        self._check_vl(vl)
        beats = _ceil_div(vl, self._lanes)
        if kind.is_strided:
            beats *= self.config.strided_mem_factor
        return self._charge_vector(self._overhead + beats, vl, repeat)

    def vec_reduce(self, vl: int, repeat: int = 1) -> int:
        """Reduction across a vector: per-lane pass followed by a log-depth lane tree."""
        self._check_vl(vl)
        cost = self._overhead + _ceil_div(vl, self._lanes) + self._tree_depth
        return self._charge_vector(cost, vl, repeat)

    def scalar_op(self, n: int = 1) -> int:
        if n < 0:
            raise ContractViolationError(app_string.NEGATIVE_COUNT.format(value=n))
        self._total_cycles += n
        self._scalar_instructions += n
        return n

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        """Record the counters accrued inside the block under `name` in `phases`."""
        start = self.snapshot()
        try:
            yield
        finally:
            accrued = self.snapshot().since(start)
            previous = self.phases.get(name)
            if previous is not None:
                accrued = previous + accrued
            self.phases[name] = accrued

    def __repr__(self) -> str:
        return f"VectorContext({self.config.label()}, {self.snapshot()})"
