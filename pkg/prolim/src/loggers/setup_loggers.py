#!/usr/bin/env python
# ./prolim/src/loggers/setup_loggers.py

import logging
from pathlib import Path

from prolim.src.errors import ConfigError
from prolim.src.loggers.handlers import LogHandlerFactory

LOGGER_NAME = "prolim"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")


def parse_level(level: str | int) -> int:
    """Accept a level name or number; raises ConfigError for anything else."""
    if isinstance(level, int):
        return level
    name = str(level).strip().upper()
    if name not in LOG_LEVELS:
        raise ConfigError(f"Invalid log level: {level}. Must be one of: {list(LOG_LEVELS)}")
    return getattr(logging, name)


def configure_logging(
    level: str | int = logging.WARNING,
    log_file: Path | str | None = None,
    enable_terminal: bool = True,
) -> logging.Logger:
    """
    Install fresh handlers on the package logger (never the root logger).

    Args:
        level: level name or number for every handler
        log_file: optional plain-text log file
        enable_terminal: attach the colored stderr handler

    Returns:
        logging.Logger: the "prolim" logger
    """
    numeric = parse_level(level)
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    handlers = LogHandlerFactory.create_handlers(
        level=numeric,
        log_file=Path(log_file) if log_file is not None else None,
        enable_console=enable_terminal,
    )
    for handler in handlers:
        logger.addHandler(handler)
    logger.setLevel(numeric)
    logger.propagate = False
    logger.debug(f"Logging configured at {logging.getLevelName(numeric)}")
    return logger
