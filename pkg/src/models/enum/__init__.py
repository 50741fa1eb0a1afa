from src.models.enum.arith_kind import ArithKind
from src.models.enum.chart_grouping import ChartGrouping
from src.models.enum.kernel_name import KernelName
from src.models.enum.mem_kind import MemKind

__all__ = ["ArithKind", "ChartGrouping", "KernelName", "MemKind"]
