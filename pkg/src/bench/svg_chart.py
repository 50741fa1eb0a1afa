"""
Stand-alone SVG 1.1 grouped bar chart of benchmark cycles.

One 1200x400 panel per kernel, stacked vertically. Bars are grouped by
(size, VLEN) with one series per lane count (or by (size, lanes) with one
series per VLEN). Output is byte-stable for a given record sequence.
"""
import math
from typing import Dict, List, Sequence, Tuple
from xml.sax.saxutils import escape

from src.models.enum.chart_grouping import ChartGrouping
from src.models.schemas.bench_record import BenchRecord
from src.utils import app_string
from src.utils.errors import EmptyInputError

PANEL_WIDTH = 1200
PANEL_HEIGHT = 400
MARGIN_LEFT = 90
MARGIN_RIGHT = 170
MARGIN_TOP = 40
MARGIN_BOTTOM = 70
GROUP_FILL = 0.8
Y_TICKS = 4

PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
    "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
)

_SERIES_LABEL = {
    ChartGrouping.SIZE_VLEN: "lanes",
    ChartGrouping.SIZE_LANES: "VLEN",
}


def _f(value: float) -> str:
    return f"{value:.2f}"


def _group_and_series(record: BenchRecord, grouping: ChartGrouping) -> Tuple[Tuple[int, int], int]:
    if grouping == ChartGrouping.SIZE_VLEN:
        return (record.size, record.vlen_bits), record.lanes
    return (record.size, record.lanes), record.vlen_bits


def _group_label(group: Tuple[int, int], grouping: ChartGrouping) -> Tuple[str, str]:
    size, other = group
    second = f"VLEN={other}" if grouping == ChartGrouping.SIZE_VLEN else f"lanes={other}"
    return f"n={size}", second


class _YScale:
    def __init__(self, cycles: List[int], log_scale: bool, height: float):
        self.log_scale = log_scale
        self.height = height
        positive = [c for c in cycles if c > 0] or [1]
        if log_scale:
            # one decade below the smallest bar so it never draws at zero height
            self.lo = math.ceil(math.log10(min(positive))) - 1
            self.hi = math.ceil(math.log10(max(positive)))
            if self.hi <= self.lo:
                self.hi = self.lo + 1
        else:
            self.lo = 0
            self.hi = max(positive)

    def bar_height(self, cycles: int) -> float:
        if self.log_scale:
            return (math.log10(cycles) - self.lo) / (self.hi - self.lo) * self.height
        return cycles / self.hi * self.height

    def ticks(self) -> List[Tuple[float, str]]:
        if self.log_scale:
            return [
                ((d - self.lo) / (self.hi - self.lo) * self.height, f"1e{d}")
                for d in range(self.lo, self.hi + 1)
            ]
        return [
            (i / Y_TICKS * self.height, str(round(self.hi * i / Y_TICKS)))
            for i in range(Y_TICKS + 1)
        ]


def _panel(kernel: str, records: List[BenchRecord], index: int,
           grouping: ChartGrouping, log_scale: bool) -> List[str]:
    plot_w = PANEL_WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = PANEL_HEIGHT - MARGIN_TOP - MARGIN_BOTTOM
    top = index * PANEL_HEIGHT + MARGIN_TOP
    base = top + plot_h

    bars: Dict[Tuple[Tuple[int, int], int], BenchRecord] = {}
    for record in records:
        if record.failed or record.cycles <= 0:
            continue
        bars[_group_and_series(record, grouping)] = record
    groups = sorted({_group_and_series(r, grouping)[0] for r in records})
    series = sorted({_group_and_series(r, grouping)[1] for r in records})
    scale = _YScale([r.cycles for r in bars.values()], log_scale, plot_h)

    group_w = plot_w / len(groups)
    bar_w = group_w * GROUP_FILL / len(series)
    series_label = _SERIES_LABEL[grouping]

    out = [f'<g class="panel" id="panel-{escape(kernel)}">']
    out.append(
        f'<text class="panel-title" x="{_f(PANEL_WIDTH / 2)}" y="{_f(top - 15)}" '
        f'text-anchor="middle" font-size="16">{escape(kernel)}</text>'
    )
    for offset, label in scale.ticks():
        y = base - offset
        out.append(
            f'<line class="grid" x1="{MARGIN_LEFT}" y1="{_f(y)}" x2="{MARGIN_LEFT + plot_w}" y2="{_f(y)}" '
            f'stroke="#eeeeee" stroke-width="1"/>'
        )
        out.append(
            f'<text class="tick" x="{MARGIN_LEFT - 6}" y="{_f(y + 4)}" text-anchor="end" '
            f'font-size="11">{label}</text>'
        )
    out.append(
        f'<line class="axis" x1="{MARGIN_LEFT}" y1="{_f(top)}" x2="{MARGIN_LEFT}" y2="{_f(base)}" '
        f'stroke="#333333" stroke-width="1"/>'
    )
    out.append(
        f'<line class="axis" x1="{MARGIN_LEFT}" y1="{_f(base)}" x2="{MARGIN_LEFT + plot_w}" y2="{_f(base)}" '
        f'stroke="#333333" stroke-width="1"/>'
    )

    for g, group in enumerate(groups):
        group_x = MARGIN_LEFT + g * group_w + group_w * (1 - GROUP_FILL) / 2
        for s, value in enumerate(series):
            record = bars.get((group, value))
            if record is None:
                continue
            height = scale.bar_height(record.cycles)
            x = group_x + s * bar_w
            out.append(
                f'<rect class="bar" id="bar-{record.kernel.value}-{record.size}-{record.vlen_bits}-{record.lanes}" '
                f'x="{_f(x)}" y="{_f(base - height)}" width="{_f(bar_w)}" height="{_f(height)}" '
                f'fill="{PALETTE[s % len(PALETTE)]}"><title>{record.cycles} cycles</title></rect>'
            )
        first, second = _group_label(group, grouping)
        center = MARGIN_LEFT + (g + 0.5) * group_w
        out.append(
            f'<text class="group-label" x="{_f(center)}" y="{_f(base + 16)}" text-anchor="middle" '
            f'font-size="11">{first}</text>'
        )
        out.append(
            f'<text class="group-label" x="{_f(center)}" y="{_f(base + 30)}" text-anchor="middle" '
            f'font-size="11">{second}</text>'
        )

    axis_title = "matrix size / VLEN (bits)" if grouping == ChartGrouping.SIZE_VLEN else "matrix size / lanes"
    out.append(
        f'<text class="axis-label" x="{_f(MARGIN_LEFT + plot_w / 2)}" y="{_f(base + 55)}" '
        f'text-anchor="middle" font-size="13">{axis_title}</text>'
    )
    y_title = "Clock cycles (log10)" if log_scale else "Clock cycles"
    mid_y = top + plot_h / 2
    out.append(
        f'<text class="axis-label" x="20" y="{_f(mid_y)}" text-anchor="middle" font-size="13" '
        f'transform="rotate(-90 20 {_f(mid_y)})">{y_title}</text>'
    )

    legend_x = MARGIN_LEFT + plot_w + 20
    out.append('<g class="legend">')
    for s, value in enumerate(series):
        y = top + 10 + s * 20
        out.append(
            f'<g class="legend-entry"><rect x="{legend_x}" y="{_f(y)}" width="12" height="12" '
            f'fill="{PALETTE[s % len(PALETTE)]}"/><text x="{legend_x + 18}" y="{_f(y + 10)}" '
            f'font-size="12">{series_label}={value}</text></g>'
        )
    out.append('</g>')
    out.append('</g>')
    return out


def emit_svg_chart(records: Sequence[BenchRecord],
                   group_by: ChartGrouping = ChartGrouping.SIZE_VLEN,
                   log_scale: bool = False) -> str:
    if not records:
        raise EmptyInputError(app_string.EMPTY_RECORDS)

    by_kernel: Dict[str, List[BenchRecord]] = {}
    for record in sorted(records, key=lambda r: r.sort_key):
        by_kernel.setdefault(record.kernel.value, []).append(record)

    height = PANEL_HEIGHT * len(by_kernel)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{PANEL_WIDTH}" height="{height}" '
        f'viewBox="0 0 {PANEL_WIDTH} {height}" font-family="Arial, sans-serif">',
        f'<rect x="0" y="0" width="{PANEL_WIDTH}" height="{height}" fill="#ffffff"/>',
    ]
    for index, (kernel, kernel_records) in enumerate(by_kernel.items()):
        lines.extend(_panel(kernel, kernel_records, index, group_by, log_scale))
    lines.append('</svg>')
    return "\n".join(lines) + "\n"
