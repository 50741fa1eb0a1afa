from src.models.schemas.bench_record import CSV_FIELDS, BenchRecord, format_checksum
from src.models.schemas.channel_inputs import ChannelStats, Observation, PilotBlock
from src.models.schemas.cycle_ledger import CycleLedger
from src.models.schemas.fft_plan import FftPlan, is_power_of_four
from src.models.schemas.steering import (
    AntennaWeight,
    BeamWeights,
    PropagationPath,
    SteeringArrayConfig,
    UserPaths,
)
from src.models.schemas.sweep_spec import SweepSpec
from src.models.schemas.vector_config import VectorConfig

__all__ = [
    "CSV_FIELDS",
    "AntennaWeight",
    "BeamWeights",
    "BenchRecord",
    "ChannelStats",
    "CycleLedger",
    "FftPlan",
    "Observation",
    "PilotBlock",
    "PropagationPath",
    "SteeringArrayConfig",
    "SweepSpec",
    "UserPaths",
    "VectorConfig",
    "format_checksum",
    "is_power_of_four",
]
