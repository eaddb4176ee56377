"""
Verification checks. Each returns a CheckReport; mathematical failures are
report entries with witnesses, never exceptions.
"""

from .report import CheckReport
from .prop_ses import verify_prop_ses
from .xa import DigitSequence, build_xa
from .nakayama import nakayama_lift
from .kappa import check_kappa, check_tor_ppower
from .fsscan import fs_scan



__all__ = [
    "CheckReport",
    "verify_prop_ses",
    "DigitSequence",
    "build_xa",
    "nakayama_lift",
    "check_kappa",
    "check_tor_ppower",
    "fs_scan"
]
