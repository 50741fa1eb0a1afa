from enum import Enum


class ChartGrouping(str, Enum):
    """Which record axes form the bar groups; the remaining axis forms the series."""
    SIZE_VLEN  = "size-vlen"   # series = lanes
    SIZE_LANES = "size-lanes"  # series = vlen
