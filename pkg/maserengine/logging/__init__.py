"""Logging configuration for maserengine."""

import logging
from pathlib import Path
from typing import Optional, Union

from .formatters import MaserFormatter
from .handlers import ConsoleHandler, FileHandler

def setup_logging(
    log_path: Optional[Path] = None,
    level: Union[int, str] = logging.INFO,
    max_bytes: int = 10_485_760,
    backup_count: int = 5,
) -> logging.Logger:
    """Set up logging configuration.

    Args:
        log_path: Optional path to log file. If not provided, logs will only go to console.
        level: Console log level
        max_bytes: Size at which the log file rotates
        backup_count: Number of rotated files kept

    Returns:
        The package logger
    """
    logger = logging.getLogger("maserengine")
    logger.setLevel(logging.DEBUG)

    # Clear any existing handlers
    for handler in list(logger.handlers):
        handler.close()
    logger.handlers.clear()

    console_handler = ConsoleHandler(level=logging.getLevelName(level) if isinstance(level, str) else level)
    console_handler.setFormatter(MaserFormatter(compact=True))
    logger.addHandler(console_handler)

    # File handler (DEBUG and above) if log path provided
    if log_path:
        file_handler = FileHandler(Path(log_path), max_bytes=max_bytes, backup_count=backup_count)
        file_handler.setFormatter(MaserFormatter())
        file_handler.setLevel(logging.DEBUG)
        logger.addHandler(file_handler)

    # Prevent propagation to root logger
    logger.propagate = False
    return logger
