from src.utils import app_string


class LowPhyError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(LowPhyError, ValueError):
    pass


class SingularMatrixError(LowPhyError, ArithmeticError):
    def __init__(self, column: int):
        super().__init__(app_string.SINGULAR_MATRIX.format(column=column))
        self.column = column


class ContractViolationError(LowPhyError):
    pass


class EmptyInputError(LowPhyError, ValueError):
    pass


class MissingBaselineError(LowPhyError, ValueError):
    def __init__(self, kernel: str, size: int, vlen: int, lanes: int):
        super().__init__(app_string.MISSING_BASELINE.format(
            kernel=kernel, size=size, vlen=vlen, lanes=lanes
        ))
        self.kernel = kernel
        self.size = size


class SweepSpecError(LowPhyError, ValueError):
    pass


class CsvFormatError(LowPhyError, ValueError):
    def __init__(self, line_number: int, detail: str):
        super().__init__(app_string.MALFORMED_CSV_ROW.format(line=line_number, detail=detail))
        self.line_number = line_number
