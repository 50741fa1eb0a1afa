"""
lowphy-vec command line.

    lowphy-vec verify  [--kernel K,..] [--size N,..] [--fft-sizes N,..] [--seed S]
    lowphy-vec bench   [--spec FILE] [--kernels ..] [--sizes ..] [--fft-sizes ..]
                       [--vlens ..] [--lanes ..] [--seed S] [--out CSV]
                       [--issue-overhead C] [--strided-factor F] [--workers W]
    lowphy-vec plot    CSV [--out SVG] [--log-scale] [--group-by size-vlen|size-lanes]
    lowphy-vec speedup CSV [--baseline-vlen 512] [--baseline-lanes 2]

Exit status: 0 success, 1 runtime or check failure, 2 usage error.
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from pydantic import ValidationError

from src.bench.csv_io import emit_csv, load_csv
from src.bench.spec_file import load_sweep_spec
from src.bench.speedup import format_speedup_table, speedup_table
from src.bench.svg_chart import emit_svg_chart
from src.bench.sweep import run_sweep
from src.cli import cli_logger
from src.config import DEFAULT_SEED, DEFAULT_SIZES, SWEEP_WORKERS, VERIFY_FFT_SIZES
from src.machine.presets import preset_pairs
from src.models.enum.chart_grouping import ChartGrouping
from src.models.enum.kernel_name import KernelName
from src.models.schemas.fft_plan import is_power_of_four
from src.models.schemas.sweep_spec import SweepSpec
from src.utils import app_string
from src.utils.errors import LowPhyError, SweepSpecError
from src.utils.logger import AppLogger, set_app_context
from src.utils.status import ExitStatus
from src.verify.suite import plan_checks, run_checks

BASELINE_VLEN = 512
BASELINE_LANES = 2


# ------------------------------------------------------------ arg parsing

def _int_list(text: str) -> List[int]:
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(app_string.NOT_AN_INTEGER_LIST.format(text=text))
    if not values or any(v < 1 for v in values):
        raise argparse.ArgumentTypeError(app_string.NOT_AN_INTEGER_LIST.format(text=text))
    return values


def _kernel_list(text: str) -> List[KernelName]:
    kernels = []
    for name in (v.strip().lower() for v in text.split(",")):
        if not name:
            continue
        try:
            kernels.append(KernelName(name))
        except ValueError:
            choices = ", ".join(k.value for k in KernelName)
            raise argparse.ArgumentTypeError(app_string.UNKNOWN_KERNEL.format(name=name, choices=choices))
    if not kernels:
        raise argparse.ArgumentTypeError(app_string.UNKNOWN_KERNEL.format(name=text, choices=""))
    return kernels


def _seed(text: str) -> int:
    try:
        seed = int(text, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(app_string.SEED_OUT_OF_RANGE.format(seed=text))
    if not 0 <= seed < 2 ** 64:
        raise argparse.ArgumentTypeError(app_string.SEED_OUT_OF_RANGE.format(seed=seed))
    return seed


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(app_string.NEGATIVE_COUNT.format(value=value))
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _add_selection(parser: argparse.ArgumentParser, seed_default: Optional[int]) -> None:
    parser.add_argument("--kernel", "--kernels", dest="kernels", type=_kernel_list,
                        help="comma-separated kernels: " + ", ".join(k.value for k in KernelName))
    parser.add_argument("--size", "--sizes", dest="sizes", type=_int_list,
                        help="comma-separated matrix sizes")
    parser.add_argument("--fft-sizes", dest="fft_sizes", type=_int_list,
                        help="comma-separated FFT lengths (powers of 4)")
    parser.add_argument("--seed", type=_seed, default=seed_default, help="random seed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lowphy-vec",
        description="LOW-PHY kernels on an abstract vector machine: verify, benchmark, plot.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run the numerical verification suite")
    _add_selection(verify, DEFAULT_SEED)

    bench = sub.add_parser("bench", help="run the cycle-count sweep and write CSV")
    _add_selection(bench, None)
    bench.add_argument("--spec", help="sweep spec file; inline flags override its values")
    bench.add_argument("--vlens", type=_int_list, help="comma-separated VLEN values in bits")
    bench.add_argument("--lanes", type=_int_list, help="comma-separated lane counts")
    bench.add_argument("--out", help="CSV output path (stdout when omitted)")
    bench.add_argument("--issue-overhead", dest="issue_overhead", type=_non_negative,
                       help="cycles charged per vector instruction issue")
    bench.add_argument("--strided-factor", dest="strided_factor", type=_positive,
                       help="beat multiplier for strided memory operations")
    bench.add_argument("--workers", type=int, default=SWEEP_WORKERS, help="sweep worker threads")

    plot = sub.add_parser("plot", help="render a bench CSV as an SVG bar chart")
    plot.add_argument("csv", help="bench CSV file")
    plot.add_argument("--out", help="SVG output path (defaults to the CSV path with .svg)")
    plot.add_argument("--log-scale", action="store_true", help="log10 y-axis")
    plot.add_argument("--group-by", dest="group_by", type=ChartGrouping,
                      choices=list(ChartGrouping), default=ChartGrouping.SIZE_VLEN,
                      help="bar grouping")

    speedup = sub.add_parser("speedup", help="print speedups relative to a baseline preset")
    speedup.add_argument("csv", help="bench CSV file")
    speedup.add_argument("--baseline-vlen", dest="baseline_vlen", type=int, default=BASELINE_VLEN)
    speedup.add_argument("--baseline-lanes", dest="baseline_lanes", type=int, default=BASELINE_LANES)
    return parser


def _fail(message: str, status: ExitStatus = ExitStatus.FAILURE) -> int:
    print(message, file=sys.stderr)
    cli_logger.debug(message)
    return int(status)


# --------------------------------------------------------------- commands

def cmd_verify(args: argparse.Namespace) -> int:
    sizes = args.sizes or DEFAULT_SIZES
    fft_sizes = args.fft_sizes or VERIFY_FFT_SIZES
    if any(n < 2 for n in sizes):
        return _fail(f"matrix sizes must be at least 2, got {sizes}", ExitStatus.USAGE_ERROR)
    if not all(is_power_of_four(n) for n in fft_sizes):
        return _fail(f"fft sizes must be powers of 4, got {fft_sizes}", ExitStatus.USAGE_ERROR)

    with set_app_context(AppLogger.VERIFY):
        results = run_checks(plan_checks(kernels=args.kernels, sizes=sizes, fft_sizes=fft_sizes, seed=args.seed))
    for result in results:
        print(result.to_line())
    passed = sum(1 for r in results if r.passed)
    print(app_string.VERIFY_SUMMARY.format(passed=passed, total=len(results)))
    return int(ExitStatus.SUCCESS if passed == len(results) else ExitStatus.FAILURE)


def _sweep_spec(args: argparse.Namespace) -> SweepSpec:
    overrides = {
        "kernels": args.kernels,
        "sizes": args.sizes,
        "fft_sizes": args.fft_sizes,
        "vlens": args.vlens,
        "lanes": args.lanes,
        "seed": args.seed,
        "issue_overhead": args.issue_overhead,
        "strided_factor": args.strided_factor,
    }
    if args.spec:
        return load_sweep_spec(args.spec, **overrides)
    try:
        return SweepSpec(**{k: v for k, v in overrides.items() if v is not None})
    except ValidationError as e:
        raise SweepSpecError(str(e)) from e


def cmd_bench(args: argparse.Namespace) -> int:
    try:
        spec = _sweep_spec(args)
    except SweepSpecError as e:
        return _fail(str(e), ExitStatus.USAGE_ERROR)

    with set_app_context(AppLogger.BENCH):
        records = run_sweep(spec, workers=max(1, args.workers))
    comments = [
        f"seed={spec.seed}",
        f"issue_overhead={spec.effective_issue_overhead} strided_factor={spec.effective_strided_factor}",
    ]
    text = emit_csv(records, comments=comments)
    failures = sum(1 for r in records if r.failed)
    _, skipped = preset_pairs(spec.vlens, spec.lanes)

    if not args.out:
        sys.stdout.write(text)
        cli_logger.info(app_string.BENCH_WRITTEN.format(
            points=len(records), failures=failures, skipped=len(skipped), path="stdout"
        ))
        return int(ExitStatus.SUCCESS)
    try:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
    except OSError as e:
        return _fail(app_string.CANNOT_WRITE.format(path=args.out, error=e))
    print(app_string.BENCH_WRITTEN.format(
        points=len(records), failures=failures, skipped=len(skipped), path=args.out
    ))
    return int(ExitStatus.SUCCESS)


def cmd_plot(args: argparse.Namespace) -> int:
    out = args.out or str(Path(args.csv).with_suffix(".svg"))
    try:
        records = load_csv(args.csv)
        svg = emit_svg_chart(records, group_by=args.group_by, log_scale=args.log_scale)
    except OSError as e:
        return _fail(app_string.CANNOT_READ.format(path=args.csv, error=e))
    except LowPhyError as e:
        return _fail(str(e))
    try:
        Path(out).write_text(svg, encoding="utf-8", newline="\n")
    except OSError as e:
        return _fail(app_string.CANNOT_WRITE.format(path=out, error=e))
    cli_logger.info(f"Wrote chart of {len(records)} records to {out}")
    return int(ExitStatus.SUCCESS)


def cmd_speedup(args: argparse.Namespace) -> int:
    try:
        records = load_csv(args.csv)
        rows = speedup_table(records, (args.baseline_vlen, args.baseline_lanes))
    except OSError as e:
        return _fail(app_string.CANNOT_READ.format(path=args.csv, error=e))
    except LowPhyError as e:
        return _fail(str(e))
    sys.stdout.write(format_speedup_table(rows))
    return int(ExitStatus.SUCCESS)


COMMANDS = {
    "verify": cmd_verify,
    "bench": cmd_bench,
    "plot": cmd_plot,
    "speedup": cmd_speedup,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if isinstance(e.code, int) else int(ExitStatus.USAGE_ERROR)
    with set_app_context(AppLogger.CLI):
        cli_logger.debug(f"Running {args.command}")
        return COMMANDS[args.command](args)
