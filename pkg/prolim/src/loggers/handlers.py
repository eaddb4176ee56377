#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/loggers/handlers.py

import logging
import sys
from pathlib import Path

import colorlog


class LogHandlerFactory:
    """
    Builds the console and file handlers used by the prolim logger.
    Console output goes to stderr so reports written to stdout stay clean.
    """

    DEFAULT_COLORS = {
        'DEBUG': 'cyan',
        'INFO': 'green',
        'WARNING': 'yellow',
        'ERROR': 'red',
        'CRITICAL': 'red,bg_white',
    }

    @staticmethod
    def create_console_handler(
        level: int,
        format_string: str | None = None,
        log_colors: dict[str, str] | None = None
    ) -> logging.Handler:
        """Colored stderr handler."""
        handler = colorlog.StreamHandler(sys.stderr)
        handler.setLevel(level)

        if format_string is None:
            format_string = (
                '%(log_color)s%(levelname)s%(reset)s - %(name)s - '
                '%(log_color)s%(message)s%(reset)s'
            )

        formatter = colorlog.ColoredFormatter(
            format_string,
            log_colors=log_colors or LogHandlerFactory.DEFAULT_COLORS,
            reset=True,
            style='%'
        )
        handler.setFormatter(formatter)
        return handler

    @staticmethod
    def create_file_handler(
        level: int,
        log_file: Path,
        format_string: str | None = None,
        mode: str = 'a',
        encoding: str = 'utf-8'
    ) -> logging.Handler:
        """Plain-text file handler; parent directories are created."""
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handler = logging.FileHandler(log_file, mode=mode, encoding=encoding)
        handler.setLevel(level)

        if format_string is None:
            format_string = '%(asctime)s - [%(process)d] - %(levelname)s - %(name)s - %(message)s'

        handler.setFormatter(logging.Formatter(format_string))
        return handler

    @classmethod
    def create_handlers(
        cls,
        level: int,
        log_file: Path | None = None,
        enable_console: bool = True,
    ) -> list[logging.Handler]:
        handlers = []
        if enable_console:
            handlers.append(cls.create_console_handler(level))
        if log_file is not None:
            handlers.append(cls.create_file_handler(level, log_file))
        return handlers
