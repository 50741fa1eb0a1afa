import pytest

from src.bench.csv_io import emit_csv, parse_csv
from src.models.enum.kernel_name import KernelName
from src.models.schemas.bench_record import CSV_FIELDS, BenchRecord
from src.models.schemas.cycle_ledger import CycleLedger
from src.utils.errors import CsvFormatError

HEADER = ",".join(CSV_FIELDS)


def record(kernel=KernelName.ZF, size=16, vlen=512, lanes=2, cycles=1000):
    ledger = CycleLedger(total_cycles=cycles, vector_instructions=10, scalar_instructions=5, vector_element_ops=80)
    return BenchRecord.from_ledger(kernel, size, vlen, lanes, ledger, "12.3457")


def test_empty_sweep_is_header_only():
    assert emit_csv([]) == HEADER + "\n"


def test_row_layout():
    text = emit_csv([record()])
    assert text == HEADER + "\nzf,16,512,2,1000,10,5,80,12.3457\n"


def test_failed_record():
    text = emit_csv([BenchRecord.failure(KernelName.FFT, 64, 1024, 4)])
    assert text.splitlines()[1] == "fft,64,1024,4,0,0,0,0,FAILED"
    assert parse_csv(text)[0].failed


def test_parse_inverts_emit():
    records = [record(), record(KernelName.BEAM, 32, 4096, 16, 77), BenchRecord.failure(KernelName.LSE, 16, 512, 2)]
    assert parse_csv(emit_csv(records, comments=["seed=42"])) == records


def test_comments_lead_the_file():
    lines = emit_csv([record()], comments=["seed=42", "issue_overhead=1 strided_factor=2"]).splitlines()
    assert lines[:3] == ["# seed=42", "# issue_overhead=1 strided_factor=2", HEADER]


def test_bad_row_reports_its_line():
    text = "# seed=42\n" + HEADER + "\nzf,16,512,2,1000,10,5,80,1.0\nzf,sixteen,512,2,1,1,1,1,1.0\n"
    with pytest.raises(CsvFormatError) as e:
        parse_csv(text)
    assert e.value.line_number == 4
    assert "line 4" in str(e.value)


def test_short_row():
    with pytest.raises(CsvFormatError) as e:
        parse_csv(HEADER + "\nzf,16\n")
    assert e.value.line_number == 2


def test_unknown_kernel_row():
    with pytest.raises(CsvFormatError):
        parse_csv(HEADER + "\nqr,16,512,2,1,1,1,1,1.0\n")


@pytest.mark.parametrize("text", ["", "kernel,size\n", "zf,16,512,2,1,1,1,1,1.0\n"])
def test_header_is_required(text):
    with pytest.raises(CsvFormatError) as e:
        parse_csv(text)
    assert e.value.line_number == 1
