import math
from typing import Callable, NamedTuple

from src.utils.check_format import CheckFormat
from src.utils.status import CheckStatus


class Check(NamedTuple):
    """A named, deferred correctness check."""
    name: str
    run: Callable[[], CheckFormat]


def within(name: str, error: float, tol: float) -> CheckFormat:
    """PASS when error < tol (NaN never passes)."""
    ok = not math.isnan(error) and error < tol
    return CheckFormat(
        status=CheckStatus.PASS if ok else CheckStatus.FAIL,
        message=name,
        data=f"err={error:.3e} tol={tol:.0e}",
    )


def holds(name: str, condition: bool, detail: str = None) -> CheckFormat:
    return CheckFormat(
        status=CheckStatus.PASS if condition else CheckStatus.FAIL,
        message=name,
        data=detail,
    )
