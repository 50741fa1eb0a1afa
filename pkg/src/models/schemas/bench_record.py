from __future__ import annotations

from typing import Dict

from pydantic import BaseModel, ConfigDict, Field

from src.models.enum.kernel_name import KernelName
from src.models.schemas.cycle_ledger import CycleLedger
from src.utils.status import CheckStatus

CSV_FIELDS = (
    "kernel",
    "size",
    "vlen_bits",
    "lanes",
    "cycles",
    "vector_instructions",
    "scalar_instructions",
    "vector_element_ops",
    "checksum",
)


def format_checksum(value: float) -> str:
    """Six significant digits, fixed '.' decimal separator."""
    return f"{value:.6g}"


class BenchRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    kernel: KernelName
    size: int = Field(..., ge=1)
    vlen_bits: int
    lanes: int
    cycles: int = Field(default=0, ge=0)
    vector_instructions: int = Field(default=0, ge=0)
    scalar_instructions: int = Field(default=0, ge=0)
    vector_element_ops: int = Field(default=0, ge=0)
    checksum: str = Field(..., description="Output norm with 6 significant digits, or FAILED")
    # named sub-ledgers; not part of the CSV schema
    phases: Dict[str, CycleLedger] = Field(default_factory=dict, exclude=True)

    @property
    def failed(self) -> bool:
        return self.checksum == CheckStatus.FAILED.value

    @property
    def sort_key(self):
        return self.kernel.value, self.size, self.vlen_bits, self.lanes

    @classmethod
    def from_ledger(cls, kernel: KernelName, size: int, vlen_bits: int, lanes: int,
                    ledger: CycleLedger, checksum: str, phases: Dict[str, CycleLedger] = None) -> BenchRecord:
        return cls(
            kernel=kernel,
            size=size,
            vlen_bits=vlen_bits,
            lanes=lanes,
            cycles=ledger.total_cycles,
            vector_instructions=ledger.vector_instructions,
            scalar_instructions=ledger.scalar_instructions,
            vector_element_ops=ledger.vector_element_ops,
            checksum=checksum,
            phases=phases or {},
        )

    @classmethod
    def failure(cls, kernel: KernelName, size: int, vlen_bits: int, lanes: int) -> BenchRecord:
        return cls(kernel=kernel, size=size, vlen_bits=vlen_bits, lanes=lanes,
                   checksum=CheckStatus.FAILED.value)

    def csv_row(self) -> list:
        return [
            self.kernel.value,
            self.size,
            self.vlen_bits,
            self.lanes,
            self.cycles,
            self.vector_instructions,
            self.scalar_instructions,
            self.vector_element_ops,
            self.checksum,
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BenchRecord):
            return NotImplemented
        return self.csv_row() == other.csv_row()

    def __hash__(self):
        return hash(tuple(self.csv_row()))
