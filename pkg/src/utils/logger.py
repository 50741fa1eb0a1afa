"""
Logger utilities with context-aware logging.

This module provides:
1. setup_logger() - Function to create configured logger instances
2. Context-aware logging that allows shared layers (linalg, machine, kernels)
   to automatically use the logger of the calling app

Usage:
    # Setting up a basic logger:
    from src.utils.logger import setup_logger
    my_logger = setup_logger("bench", logging.INFO, "bench.log")

    # In an entry point (context-aware):
    from src.utils.logger import set_app_context, AppLogger
    with set_app_context(AppLogger.BENCH):
        # All kernel calls will log through bench_logger
        records = run_sweep(spec)

    # In shared layers:
    from src.utils.logger import get_current_logger
    logger = get_current_logger()
    logger.debug("This logs to the calling app's logger")
"""

import logging
import os
import sys
from contextvars import ContextVar
from enum import Enum
from logging.handlers import RotatingFileHandler
from typing import Optional

from src.config import LOG_DIR, LOG_LEVEL, LOG_TO_FILE


def setup_logger(name: str = "lowphy", log_level: int = logging.INFO, log_file: str = None):
    """
    Sets up a logger with a console handler and, when enabled, file handlers.

    Console output goes to stderr so stdout stays free for check lines,
    tables and other command output.

    Args:
        name (str): The name of the logger.
        log_level (int): The logging level (default: logging.INFO).
        log_file (str): Optional custom log filename (without path). If not provided, defaults to "{name}.log".

    Returns:
        logging.Logger: The configured logger instance.
    """
    logger = logging.getLogger(name)
    logger.setLevel(log_level)

    # Check if handlers are already added to avoid duplicate logs
    if not logger.handlers:
        formatter = logging.Formatter(
            "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
            datefmt="%Y-%m-%d %H:%M:%S"
        )

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if LOG_TO_FILE:
            if log_file is None:
                log_file = f"{name}.log"
            os.makedirs(LOG_DIR, exist_ok=True)

            app_log_file = os.path.join(LOG_DIR, log_file)
            error_log_file = os.path.join(LOG_DIR, f"{os.path.splitext(log_file)[0]}_error.log")

            file_handler = RotatingFileHandler(
                app_log_file, maxBytes=10*1024*1024, backupCount=5, encoding="utf-8"
            )
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

            error_file_handler = RotatingFileHandler(
                error_log_file, maxBytes=10*1024*1024, backupCount=5, encoding="utf-8"
            )
            error_file_handler.setFormatter(formatter)
            error_file_handler.setLevel(logging.ERROR)
            logger.addHandler(error_file_handler)

    return logger


def level_from_name(name: str) -> int:
    level = getattr(logging, name.upper(), logging.INFO)
    return level if isinstance(level, int) else logging.INFO


# ============================================================================
# Context-Aware Logging
# ============================================================================

class AppLogger(Enum):
    """Enum of available app loggers."""
    CLI = "cli"
    BENCH = "bench"
    VERIFY = "verify"
    DEFAULT = "lowphy"


_current_app_logger: ContextVar[AppLogger] = ContextVar('current_app_logger', default=AppLogger.DEFAULT)
logger = setup_logger("lowphy", level_from_name(LOG_LEVEL), "lowphy.log")  # Default logger


def get_current_logger() -> logging.Logger:
    """
    Get the logger for the current app context.

    Used by shared layers (linalg, machine, kernels) so that their messages
    end up in the logger of whichever app is driving them.

    Returns:
        logging.Logger: The logger instance for the current app context
    """
    app_logger_type = _current_app_logger.get()

    if app_logger_type == AppLogger.BENCH:
        from src.bench import bench_logger
        return bench_logger

    elif app_logger_type == AppLogger.VERIFY:
        from src.verify import verify_logger
        return verify_logger

    elif app_logger_type == AppLogger.CLI:
        from src.cli import cli_logger
        return cli_logger

    else:
        return logger


class set_app_context:
    """
    Context manager to set the current app logger context.

    Usage:
        with set_app_context(AppLogger.VERIFY):
            # All get_current_logger() calls will return verify_logger
            results = run_checks(plan)
    """

    def __init__(self, app_logger: AppLogger):
        self.app_logger = app_logger
        self.token: Optional[object] = None

    def __enter__(self):
        self.token = _current_app_logger.set(self.app_logger)
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.token is not None:
            _current_app_logger.reset(self.token)
        return False


def get_current_app_name() -> str:
    """
    Get the name of the current app context.

    Returns:
        str: Name of the current app (e.g., "bench", "verify")
    """
    return _current_app_logger.get().value
