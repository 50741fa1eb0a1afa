from __future__ import annotations

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config import ISSUE_OVERHEAD_CYCLES, SEW_BITS, STRIDED_MEM_FACTOR


def _is_power_of_two(value: int) -> bool:
    return value >= 1 and (value & (value - 1)) == 0


class VectorConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    vlen_bits: int = Field(..., gt=0, description="Vector register length in bits")
    lanes: int = Field(..., ge=1, description="Parallel lane count")
    sew_bits: int = Field(default=SEW_BITS, description="Element width in bits")
    issue_overhead_cycles: int = Field(default=ISSUE_OVERHEAD_CYCLES, ge=0)
    strided_mem_factor: int = Field(default=STRIDED_MEM_FACTOR, ge=1)

    @model_validator(mode="after")
    def _check_geometry(self):
        if self.sew_bits != SEW_BITS:
            raise ValueError(f"sew_bits must be {SEW_BITS}")
        if self.vlen_bits % self.sew_bits != 0 or not _is_power_of_two(self.vlen_bits // self.sew_bits):
            raise ValueError("vlen_bits must be a power-of-two multiple of sew_bits")
        if not _is_power_of_two(self.lanes):
            raise ValueError("lanes must be a power of two")
        if self.lanes > self.vlen_bits // self.sew_bits:
            raise ValueError("lanes must not exceed vlen_bits / sew_bits")
        return self

    @property
    def vlmax(self) -> int:
        return self.vlen_bits // self.sew_bits

    @staticmethod
    def is_valid_pair(vlen_bits: int, lanes: int) -> bool:
        return (
            vlen_bits % SEW_BITS == 0
            and _is_power_of_two(vlen_bits // SEW_BITS)
            and _is_power_of_two(lanes)
            and lanes <= vlen_bits // SEW_BITS
        )

    def label(self) -> str:
        return f"vlen={self.vlen_bits} lanes={self.lanes}"
