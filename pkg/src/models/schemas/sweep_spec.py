from __future__ import annotations

from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.config import (
    DEFAULT_FFT_SIZES,
    DEFAULT_LANES,
    DEFAULT_SEED,
    DEFAULT_SIZES,
    DEFAULT_VLENS,
    ISSUE_OVERHEAD_CYCLES,
    STRIDED_MEM_FACTOR,
)
from src.models.enum.kernel_name import KernelName
from src.models.schemas.fft_plan import is_power_of_four


class SweepSpec(BaseModel):
    model_config = ConfigDict(frozen=True, validate_default=True)

    kernels: List[KernelName] = Field(default_factory=lambda: list(KernelName))
    sizes: List[int] = Field(default_factory=lambda: list(DEFAULT_SIZES))
    fft_sizes: List[int] = Field(default_factory=lambda: list(DEFAULT_FFT_SIZES))
    vlens: List[int] = Field(default_factory=lambda: list(DEFAULT_VLENS))
    lanes: List[int] = Field(default_factory=lambda: list(DEFAULT_LANES))
    seed: int = Field(default=DEFAULT_SEED, ge=0, lt=2 ** 64)
    issue_overhead: Optional[int] = Field(default=None, ge=0)
    strided_factor: Optional[int] = Field(default=None, ge=1)

    @field_validator("sizes", "vlens", "lanes")
    @classmethod
    def _positive(cls, values: List[int]) -> List[int]:
        if any(v < 1 for v in values):
            raise ValueError("values must be positive")
        return sorted(set(values))

    @field_validator("sizes")
    @classmethod
    def _min_size(cls, values: List[int]) -> List[int]:
        if any(v < 2 for v in values):
            raise ValueError("matrix sizes must be at least 2")
        return values

    @field_validator("fft_sizes")
    @classmethod
    def _fft_sizes(cls, values: List[int]) -> List[int]:
        if any(not is_power_of_four(v) for v in values):
            raise ValueError("fft sizes must be powers of 4")
        return sorted(set(values))

    @field_validator("kernels")
    @classmethod
    def _unique_kernels(cls, values: List[KernelName]) -> List[KernelName]:
        return sorted(set(values), key=lambda k: k.value)

    @property
    def effective_issue_overhead(self) -> int:
        return ISSUE_OVERHEAD_CYCLES if self.issue_overhead is None else self.issue_overhead

    @property
    def effective_strided_factor(self) -> int:
        return STRIDED_MEM_FACTOR if self.strided_factor is None else self.strided_factor

    def sizes_for(self, kernel: KernelName) -> List[int]:
        return self.fft_sizes if kernel.uses_fft_sizes else self.sizes
