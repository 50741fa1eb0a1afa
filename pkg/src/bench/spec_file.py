"""
Sweep spec file reader.

Flat key/value text, one key per line, comma-separated values and `#`
comments:

    # small sweep
    kernels = lse, zf
    sizes   = 16
    vlens   = 512, 4096
    lanes   = 2, 8
    seed    = 7
"""
from pathlib import Path
from typing import Dict, List, Union

from pydantic import ValidationError

from src.models.schemas.sweep_spec import SweepSpec
from src.utils import app_string
from src.utils.errors import SweepSpecError

LIST_KEYS = ("kernels", "sizes", "fft_sizes", "vlens", "lanes")
SCALAR_KEYS = ("seed", "issue_overhead", "strided_factor")


def _split_values(raw: str) -> List[str]:
    return [v.strip() for v in raw.split(",") if v.strip()]


def _to_int(value: str, line_number: int, text: str) -> int:
    try:
        return int(value, 0)
    except ValueError as e:
        raise SweepSpecError(app_string.MALFORMED_SPEC_LINE.format(line=line_number, text=text)) from e


def parse_sweep_spec(text: str, **overrides) -> SweepSpec:
    """Parse spec text; keyword overrides replace file values (None values are ignored)."""
    fields: Dict[str, object] = {}
    for line_number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0].strip()
        if not content:
            continue
        key, sep, raw = content.partition("=")
        key = key.strip()
        if not sep or not key:
            raise SweepSpecError(app_string.MALFORMED_SPEC_LINE.format(line=line_number, text=line.strip()))
        values = _split_values(raw)
        if key in LIST_KEYS:
            if key == "kernels":
                fields[key] = [v.lower() for v in values]
            else:
                fields[key] = [_to_int(v, line_number, line.strip()) for v in values]
        elif key in SCALAR_KEYS:
            if len(values) != 1:
                raise SweepSpecError(app_string.MALFORMED_SPEC_LINE.format(line=line_number, text=line.strip()))
            fields[key] = _to_int(values[0], line_number, line.strip())
        else:
            raise SweepSpecError(app_string.UNKNOWN_SPEC_KEY.format(key=key, line=line_number))

    fields.update({k: v for k, v in overrides.items() if v is not None})
    try:
        return SweepSpec(**fields)
    except ValidationError as e:
        raise SweepSpecError(str(e)) from e


def load_sweep_spec(path: Union[str, Path], **overrides) -> SweepSpec:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise SweepSpecError(app_string.CANNOT_READ.format(path=path, error=e)) from e
    return parse_sweep_spec(text, **overrides)
