from __future__ import annotations

import math
from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.config import STEERING_SPACING_WAVELENGTHS
from src.linalg.complex_matrix import ComplexMatrix


class PropagationPath(BaseModel):
    model_config = ConfigDict(frozen=True)

    angle_rad: float = Field(..., ge=-math.pi / 2, le=math.pi / 2, description="Angle from broadside")
    gain: complex = Field(default=1 + 0j)


class UserPaths(BaseModel):
    model_config = ConfigDict(frozen=True)

    paths: List[PropagationPath] = Field(..., min_length=1)


class SteeringArrayConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    num_antennas: int = Field(..., ge=1)
    spacing_wavelengths: float = Field(default=STEERING_SPACING_WAVELENGTHS, gt=0.0)
    users: List[UserPaths] = Field(..., min_length=1)

    @property
    def num_users(self) -> int:
        return len(self.users)


class AntennaWeight(BaseModel):
    model_config = ConfigDict(frozen=True)

    amplitude: float = Field(..., ge=0.0)
    phase_rad: float

    @field_validator("phase_rad")
    @classmethod
    def _principal(cls, value: float) -> float:
        if not -math.pi < value <= math.pi:
            raise ValueError("phase_rad must lie in (-pi, pi]")
        return value


class BeamWeights(BaseModel):
    """Per-user amplitude/phase pairs, one per antenna element."""
    model_config = ConfigDict(frozen=True)

    users: List[List[AntennaWeight]]

    @property
    def num_users(self) -> int:
        return len(self.users)

    @property
    def num_antennas(self) -> int:
        return len(self.users[0]) if self.users else 0

    def to_matrix(self) -> ComplexMatrix:
        """Rebuild the M x Nu precoder from amplitude and phase."""
        amp = np.array([[w.amplitude for w in user] for user in self.users], dtype=np.float64)
        phase = np.array([[w.phase_rad for w in user] for user in self.users], dtype=np.float64)
        return ComplexMatrix((amp * np.exp(1j * phase)).T)

    @classmethod
    def from_matrix(cls, w: ComplexMatrix) -> BeamWeights:
        return cls.from_polar(np.abs(w.array), np.angle(w.array))

    @classmethod
    def from_polar(cls, amplitude: np.ndarray, phase: np.ndarray) -> BeamWeights:
        """Build weights from M x Nu amplitude and phase arrays."""
        phase = np.where(phase <= -math.pi, math.pi, phase)
        antennas, users = amplitude.shape
        return cls(users=[
            [AntennaWeight(amplitude=float(amplitude[m, u]), phase_rad=float(phase[m, u])) for m in range(antennas)]
            for u in range(users)
        ])
