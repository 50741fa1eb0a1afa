from src.config import LOG_LEVEL
from src.utils.logger import level_from_name, setup_logger

verify_logger = setup_logger(
    "verify",
    level_from_name(LOG_LEVEL),
    log_file="verify.log"
)
