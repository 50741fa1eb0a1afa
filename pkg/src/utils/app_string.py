EMPTY_RECORDS = "No benchmark records to plot"
MISSING_BASELINE = "Baseline (vlen={vlen}, lanes={lanes}) missing for kernel '{kernel}' size {size}"
SINGULAR_MATRIX = "Matrix is singular at column {column}"
SHAPE_MISMATCH = "Shape mismatch: {detail}"
VL_EXCEEDS_VLMAX = "Requested vl={vl} exceeds vlmax={vlmax}"
NEGATIVE_COUNT = "Count must be non-negative, got {value}"
INVALID_PRESET = "Skipping invalid preset vlen={vlen} lanes={lanes} (lanes > vlen/{sew})"
UNKNOWN_SPEC_KEY = "Unknown sweep spec key '{key}' on line {line}"
MALFORMED_SPEC_LINE = "Malformed sweep spec line {line}: {text}"
MALFORMED_CSV_ROW = "Malformed CSV at line {line}: {detail}"
NOT_UTF8 = "not valid UTF-8 text ({error})"
CSV_HEADER_MISMATCH = "CSV header does not match the benchmark schema"
CHECKSUM_MISMATCH = "Checksum {got} differs from reference {expected}"
SWEEP_POINT_FAILED = "Sweep point {kernel}/{size} vlen={vlen} lanes={lanes} failed: {error}"
SWEEP_COMPLETED = "Sweep completed: {points} points, {failures} failures, {skipped} skipped presets"
PHASE_SUMMARY = "Phases {kernel}/{size} across {presets} presets: {phases}"
VERIFY_SUMMARY = "{passed}/{total} checks passed"
BENCH_WRITTEN = "Wrote {points} records ({failures} failed, {skipped} presets skipped) to {path}"
UNKNOWN_KERNEL = "unknown kernel '{name}' (choose from {choices})"
NOT_AN_INTEGER_LIST = "expected comma-separated integers, got '{text}'"
SEED_OUT_OF_RANGE = "seed must satisfy 0 <= seed < 2**64, got {seed}"
CANNOT_READ = "Cannot read {path}: {error}"
CANNOT_WRITE = "Cannot write {path}: {error}"
