from src.config import LOG_LEVEL
from src.utils.logger import level_from_name, setup_logger

bench_logger = setup_logger(
    "bench",
    level_from_name(LOG_LEVEL),
    log_file="bench.log"
)
