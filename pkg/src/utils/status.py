import enum


class ExitStatus(enum.IntEnum):
    SUCCESS = 0
    FAILURE = 1
    USAGE_ERROR = 2


class CheckStatus(str, enum.Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    FAILED = "FAILED"
