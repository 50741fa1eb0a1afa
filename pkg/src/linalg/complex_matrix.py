from __future__ import annotations

from typing import Iterable, Sequence, Tuple

import numpy as np

from src.utils.errors import ShapeError

# Elements are complex-over-two-64-bit-reals.
Complex = complex


class ComplexMatrix:
    """
    Dense, immutable, row-major complex matrix.

    The backing array is complex128, which numpy stores interleaved
    (re, im per element) in row-major order. The array is marked read-only
    so a matrix can be shared across threads.
    """

    __slots__ = ("_data",)

    def __init__(self, data: Iterable):
        array = np.array(data, dtype=np.complex128, copy=True)
        if array.ndim != 2:
            raise ShapeError(f"Shape mismatch: expected 2-D data, got {array.ndim}-D")
        if array.shape[0] < 1 or array.shape[1] < 1:
            raise ShapeError(f"Shape mismatch: rows and cols must be positive, got {array.shape}")
        if not np.all(np.isfinite(array)):
            raise ValueError("ComplexMatrix elements must be finite")
        array.flags.writeable = False
        self._data = array

    # ------------------------------------------------------------------ build

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[complex]]) -> ComplexMatrix:
        return cls(rows)

    @classmethod
    def from_planes(cls, re: np.ndarray, im: np.ndarray) -> ComplexMatrix:
        """Build a matrix from split real/imaginary planes."""
        re = np.asarray(re, dtype=np.float64)
        im = np.asarray(im, dtype=np.float64)
        if re.shape != im.shape:
            raise ShapeError(f"Shape mismatch: planes {re.shape} and {im.shape}")
        return cls(re + 1j * im)

    @classmethod
    def from_interleaved(cls, rows: int, cols: int, values: Sequence[float]) -> ComplexMatrix:
        """Build a matrix from a flat row-major (re, im, re, im, ...) sequence."""
        flat = np.asarray(values, dtype=np.float64)
        if flat.size != 2 * rows * cols:
            raise ShapeError(f"Shape mismatch: {flat.size} values for {rows}x{cols}")
        return cls(flat.view(np.complex128).reshape(rows, cols))

    @classmethod
    def identity(cls, n: int) -> ComplexMatrix:
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ComplexMatrix:
        return cls(np.zeros((rows, cols), dtype=np.complex128))

    @classmethod
    def diag(cls, values: Sequence[complex]) -> ComplexMatrix:
        return cls(np.diag(np.asarray(values, dtype=np.complex128)))

    # ----------------------------------------------------------------- access

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the backing complex128 array."""
        return self._data

    def to_numpy(self) -> np.ndarray:
        return self._data.copy()

    def split_planes(self) -> Tuple[np.ndarray, np.ndarray]:
        """Return writable copies of the real and imaginary planes."""
        return self._data.real.copy(), self._data.imag.copy()

    def to_interleaved(self) -> np.ndarray:
        return self._data.reshape(-1).view(np.float64).copy()

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: Tuple[int, int]) -> complex:
        return complex(self._data[index])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    def __hash__(self):
        return hash((self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"ComplexMatrix({self.rows}x{self.cols})"
