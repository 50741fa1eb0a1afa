import os
from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()
LOG_DIR = os.getenv("LOG_DIR", "logs")
LOG_TO_FILE = os.getenv("LOG_TO_FILE", "false").lower() == "true"

SWEEP_WORKERS = int(os.getenv("SWEEP_WORKERS", "4"))

DEFAULT_SEED = 42

# Vector machine
SEW_BITS = 64  # element width is fixed at 64-bit
ISSUE_OVERHEAD_CYCLES = 1
STRIDED_MEM_FACTOR = 2
DEFAULT_VLENS = (512, 1024, 2048, 4096)
DEFAULT_LANES = (2, 4, 8, 16)

# Sweep / verification sizes
DEFAULT_SIZES = (16, 32)
DEFAULT_FFT_SIZES = (64, 256, 1024)
VERIFY_FFT_SIZES = (16, 64, 256, 1024)

# Numerics
SINGULARITY_RTOL = 1e-12
AGREEMENT_RTOL = 1e-9
MMSE_CORRELATION_RHO = 0.7
MMSE_NOISE_VARIANCE = 0.1
PILOT_DIAGONAL_LOAD = 2.0

# Beamforming workload
STEERING_SPACING_WAVELENGTHS = 0.5
BEAM_PATHS_PER_USER = 3
