"""
Suite selection, configuration, execution and report output.
"""

from .types import SuiteName
from .config import SuiteConfig
from .runner import SuiteReport, SuiteRunner, run_suite
from .formatter import emit_report



__all__ = [
    "SuiteName",
    "SuiteConfig",
    "SuiteReport",
    "SuiteRunner",
    "run_suite",
    "emit_report"
]
