"""
Console and file logging for prolim, built on colorlog.
"""

from .handlers import LogHandlerFactory
from .setup_loggers import configure_logging, parse_level



__all__ = [
    "LogHandlerFactory",
    "configure_logging",
    "parse_level"
]
