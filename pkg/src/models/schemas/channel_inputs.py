from __future__ import annotations

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.linalg.complex_matrix import ComplexMatrix

HERMITIAN_ATOL = 1e-12
PSD_EPSILON = 1e-12


class PilotBlock(BaseModel):
    """Known transmitted pilot symbols X (Nt x Nt)."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    x: ComplexMatrix

    @model_validator(mode="after")
    def _square(self):
        if not self.x.is_square():
            raise ValueError(f"pilot block must be square, got {self.x.rows}x{self.x.cols}")
        return self

    @property
    def nt(self) -> int:
        return self.x.rows


class Observation(BaseModel):
    """Symbols Y (Nr x Nt) received while the pilots were transmitted."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    y: ComplexMatrix


class ChannelStats(BaseModel):
    """Transmit-side channel correlation R_H and noise variance for MMSE."""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    r_h: ComplexMatrix
    sigma2: float = Field(..., ge=0.0, description="Noise variance")

    @model_validator(mode="after")
    def _hermitian_psd(self):
        r = self.r_h.array
        if not self.r_h.is_square():
            raise ValueError("r_h must be square")
        if np.max(np.abs(r - r.conj().T)) > HERMITIAN_ATOL:
            raise ValueError("r_h must be Hermitian")
        # eigenvalues of the Hermitian part, shifted by epsilon
        eigenvalues = np.linalg.eigvalsh(r + PSD_EPSILON * np.eye(r.shape[0]))
        if eigenvalues.min() < -PSD_EPSILON * max(1.0, float(np.abs(eigenvalues).max())):
            raise ValueError("r_h must be positive semi-definite")
        return self
