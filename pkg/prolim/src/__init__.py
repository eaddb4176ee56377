from prolim.src.algebra.tower import TowerSpec, build_tower
from prolim.src.suites import SuiteConfig, SuiteName, SuiteReport, SuiteRunner, emit_report, run_suite
from prolim.src.verify import CheckReport
from prolim.src.version import __version__

__all__ = [
    "CheckReport",
    "SuiteConfig",
    "SuiteName",
    "SuiteReport",
    "SuiteRunner",
    "TowerSpec",
    "build_tower",
    "emit_report",
    "run_suite",
    "__version__"
]
