#!/usr/bin/env python
"""
prolim checks finite-level identities of towers of group rings
Z[Gamma_m], Gamma_m = (Z/p^n_m)^d, with exact integer linear algebra.

Features:
- Hermite and Smith normal forms, kernels and cokernels over Z
- Finitely presented modules over Z[G] with Tor, H_1 and local generator counts
- Tower modules, presentation chains and their base-change maps
- Verification suites with deterministic JSON or text reports
"""

from .src import (
    CheckReport,
    SuiteConfig,
    SuiteName,
    SuiteReport,
    SuiteRunner,
    build_tower,
    emit_report,
    run_suite,
    TowerSpec,
    __version__,
)



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
