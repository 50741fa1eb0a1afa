from src.config import LOG_LEVEL
from src.utils.logger import level_from_name, setup_logger

cli_logger = setup_logger(
    "cli",
    level_from_name(LOG_LEVEL),
    log_file="cli.log"
)
