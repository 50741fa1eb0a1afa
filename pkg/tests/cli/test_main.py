import pytest

from src.cli.main import main

SMALL_BENCH = ["bench", "--kernels", "lse", "--sizes", "16", "--vlens", "512", "--lanes", "2"]


@pytest.fixture
def bench_csv(tmp_path, capsys):
    path = tmp_path / "bench.csv"
    assert main(["bench", "--kernels", "lse,zf", "--sizes", "16", "--vlens", "512,1024", "--lanes", "2,4",
                 "--out", str(path)]) == 0
    capsys.readouterr()
    return path


def test_verify_single_kernel(capsys):
    assert main(["verify", "--kernel", "zf", "--size", "16"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 20
    assert all(line.startswith("PASS ") for line in lines[:-1])
    assert lines[-1] == "19/19 checks passed"


def test_verify_full_suite(capsys):
    assert main(["verify"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert sum(1 for line in lines if line.startswith("PASS ")) == 228
    assert lines[-1] == "228/228 checks passed"


@pytest.mark.parametrize("argv", [
    ["verify", "--kernel", "nosuch"],
    ["verify", "--size", "x"],
    ["verify", "--fft-sizes", "32"],
    ["verify", "--size", "1"],
    ["verify", "--seed", "-1"],
    ["bench", "--sizes", "1"],
    ["bench", "--fft-sizes", "32"],
    ["bench", "--strided-factor", "0"],
    [],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 2


def test_unknown_kernel_message(capsys):
    main(["verify", "--kernel", "nosuch"])
    assert "unknown kernel 'nosuch'" in capsys.readouterr().err


def test_bench_to_stdout(capsys):
    assert main(SMALL_BENCH) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "# seed=42"
    assert lines[1] == "# issue_overhead=1 strided_factor=2"
    assert lines[2].startswith("kernel,size,vlen_bits,lanes,cycles")
    assert len(lines) == 4
    assert lines[3].startswith("lse,16,512,2,")


def test_bench_is_reproducible(capsys):
    main(SMALL_BENCH + ["--seed", "5"])
    first = capsys.readouterr().out
    main(SMALL_BENCH + ["--seed", "5"])
    assert capsys.readouterr().out == first
    assert "# seed=5" in first


def test_bench_only_invalid_presets(capsys):
    assert main(["bench", "--kernels", "zf", "--sizes", "16", "--vlens", "512", "--lanes", "16"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 3


def test_bench_spec_file(tmp_path, capsys):
    spec = tmp_path / "sweep.spec"
    spec.write_text("kernels = zf\nsizes = 16\nvlens = 1024\nlanes = 2, 4\n", encoding="utf-8")
    assert main(["bench", "--spec", str(spec), "--lanes", "4"]) == 0
    rows = capsys.readouterr().out.splitlines()[3:]
    assert len(rows) == 1
    assert rows[0].startswith("zf,16,1024,4,")


def test_bench_bad_spec_file(tmp_path, capsys):
    spec = tmp_path / "sweep.spec"
    spec.write_text("colour = red\n", encoding="utf-8")
    assert main(["bench", "--spec", str(spec)]) == 2
    assert main(["bench", "--spec", str(tmp_path / "missing.spec")]) == 2


def test_bench_undecodable_spec_file(tmp_path, capsys):
    spec = tmp_path / "sweep.spec"
    spec.write_bytes(b"\xff\xfe")
    assert main(["bench", "--spec", str(spec)]) == 2
    assert "Cannot read" in capsys.readouterr().err


def test_bench_writes_file(bench_csv):
    lines = bench_csv.read_text(encoding="utf-8").splitlines()
    assert len(lines) == 3 + 2 * 4


def test_plot(bench_csv, capsys):
    assert main(["plot", str(bench_csv)]) == 0
    svg = bench_csv.with_suffix(".svg").read_text(encoding="utf-8")
    assert svg.startswith("<svg")
    assert svg.count('class="panel"') == 2


def test_plot_options(bench_csv, tmp_path):
    out = tmp_path / "chart.svg"
    assert main(["plot", str(bench_csv), "--out", str(out), "--log-scale", "--group-by", "size-lanes"]) == 0
    assert "Clock cycles (log10)" in out.read_text(encoding="utf-8")


def test_plot_header_only(tmp_path, capsys):
    path = tmp_path / "empty.csv"
    main(["bench", "--kernels", "zf", "--sizes", "16", "--vlens", "512", "--lanes", "16", "--out", str(path)])
    assert main(["plot", str(path)]) == 1
    assert "No benchmark records" in capsys.readouterr().err


def test_plot_malformed(bench_csv, capsys):
    lines = bench_csv.read_text(encoding="utf-8").splitlines()
    lines[4] = "zf,16,512,two,1,1,1,1,1.0"
    bench_csv.write_text("\n".join(lines) + "\n", encoding="utf-8")
    assert main(["plot", str(bench_csv)]) == 1
    assert "line 5" in capsys.readouterr().err


def test_plot_undecodable_csv(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_bytes(b"\xff\xfe")
    assert main(["plot", str(path)]) == 1
    assert "line 1" in capsys.readouterr().err


def test_speedup_undecodable_csv(tmp_path, capsys):
    path = tmp_path / "bad.csv"
    path.write_bytes(b"kernel\n\xff\xfe")
    assert main(["speedup", str(path)]) == 1
    assert "line 2" in capsys.readouterr().err


def test_plot_missing_file(tmp_path, capsys):
    assert main(["plot", str(tmp_path / "nope.csv")]) == 1
    assert "Cannot read" in capsys.readouterr().err


def test_speedup(bench_csv, capsys):
    assert main(["speedup", str(bench_csv)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].split() == ["kernel", "size", "vlen_bits", "lanes", "speedup"]
    assert len(lines) == 1 + 8
    assert lines[1].split() == ["lse", "16", "512", "2", "1.00"]


def test_speedup_missing_baseline(bench_csv, capsys):
    assert main(["speedup", str(bench_csv), "--baseline-vlen", "4096"]) == 1
    assert "Baseline" in capsys.readouterr().err
