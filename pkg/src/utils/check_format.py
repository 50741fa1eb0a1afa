from typing import Any

from src.utils.status import CheckStatus


class CheckFormat:
    def __init__(self, status: CheckStatus = CheckStatus.PASS, message: str = "", data: Any = None):
        self.status = status
        self.message = message
        self.data = data

    @property
    def passed(self) -> bool:
        return self.status == CheckStatus.PASS

    def to_line(self) -> str:
        if self.data is None:
            return f"{self.status.value} {self.message}"
        return f"{self.status.value} {self.message} ({self.data})"
