import numpy as np
import pytest

from src.bench.workloads import random_complex, random_pilot
from src.linalg.complex_matrix import ComplexMatrix
from src.machine.presets import new_context, preset_configs


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@pytest.fixture
def random_matrix(rng):
    """Factory for random complex matrices, re and im uniform in [-1, 1]."""
    def _make(rows: int, cols: int = None) -> ComplexMatrix:
        return ComplexMatrix(random_complex(rng, rows, rows if cols is None else cols))
    return _make


@pytest.fixture
def pilot(rng):
    def _make(n: int):
        return random_pilot(rng, n)
    return _make


@pytest.fixture
def make_ctx():
    def _make(vlen_bits: int = 512, lanes: int = 2, **overrides):
        return new_context(vlen_bits, lanes, **overrides)
    return _make


@pytest.fixture
def ctx(make_ctx):
    return make_ctx()


PRESETS = preset_configs()


@pytest.fixture(params=PRESETS, ids=lambda c: f"{c.vlen_bits}x{c.lanes}")
def preset(request):
    return request.param
