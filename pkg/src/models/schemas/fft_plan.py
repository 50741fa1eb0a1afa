from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator


def is_power_of_four(n: int) -> bool:
    if n < 4:
        return False
    while n % 4 == 0:
        n //= 4
    return n == 1


class FftPlan(BaseModel):
    """Precomputed tables for a length-n radix-4 transform (n = 4^k, k >= 1)."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    n: int
    twiddles: np.ndarray
    digit_reversal: np.ndarray

    @model_validator(mode="after")
    def _tables(self):
        if not is_power_of_four(self.n):
            raise ValueError(f"transform length must be a power of 4, got {self.n}")
        if self.twiddles.shape != (self.n,) or self.digit_reversal.shape != (self.n,):
            raise ValueError("plan tables must have length n")
        return self

    @property
    def stages(self) -> int:
        return int(round(np.log(self.n) / np.log(4)))
