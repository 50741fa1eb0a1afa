import csv
import io
from pathlib import Path
from typing import Iterable, List, Sequence, Union

from pydantic import ValidationError

from src.models.schemas.bench_record import CSV_FIELDS, BenchRecord
from src.utils import app_string
from src.utils.errors import CsvFormatError

COMMENT_PREFIX = "#"
_INT_FIELDS = CSV_FIELDS[1:8]


def emit_csv(records: Iterable[BenchRecord], comments: Sequence[str] = ()) -> str:
    """Header plus one row per record; LF line endings; optional leading '# ' comment lines."""
    buffer = io.StringIO()
    for comment in comments:
        buffer.write(f"{COMMENT_PREFIX} {comment}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for record in records:
        writer.writerow(record.csv_row())
    return buffer.getvalue()


def parse_csv(text: str) -> List[BenchRecord]:
    """Inverse of emit_csv. Raises CsvFormatError with the 1-based line number of the first bad line."""
    records: List[BenchRecord] = []
    header_seen = False
    for line_number, line in enumerate(text.splitlines(), start=1):
        if not line.strip() or line.startswith(COMMENT_PREFIX):
            continue
        row = next(csv.reader([line]))
        if not header_seen:
            if tuple(row) != CSV_FIELDS:
                raise CsvFormatError(line_number, app_string.CSV_HEADER_MISMATCH)
            header_seen = True
            continue
        if len(row) != len(CSV_FIELDS):
            raise CsvFormatError(line_number, f"expected {len(CSV_FIELDS)} fields, got {len(row)}")
        values = dict(zip(CSV_FIELDS, row))
        try:
            for field in _INT_FIELDS:
                values[field] = int(values[field])
            records.append(BenchRecord(**values))
        except (ValueError, ValidationError) as e:
            raise CsvFormatError(line_number, str(e).splitlines()[0]) from e
    if not header_seen:
        raise CsvFormatError(1, app_string.CSV_HEADER_MISMATCH)
    return records


def load_csv(path: Union[str, Path]) -> List[BenchRecord]:
    """Read and parse a bench CSV file. OSError propagates; undecodable bytes become CsvFormatError."""
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as e:
        line_number = data.count(b"\n", 0, e.start) + 1
        raise CsvFormatError(line_number, app_string.NOT_UTF8.format(error=e.reason)) from e
    return parse_csv(text)
