#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/suites/runner.py

import asyncio
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from prolim.src.algebra.tower import Tower, build_tower
from prolim.src.errors import ConfigError, TowerError
from prolim.src.suites.builtin import SUITES
from prolim.src.suites.config import SuiteConfig
from prolim.src.verify.report import EXPECT_FAIL, CheckReport, canonical
from prolim.src.version import __version__

logger = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    """Config echo, tool version and the top-level checks in run order."""
    config: SuiteConfig
    checks: list[CheckReport] = field(default_factory=list)
    version: str = __version__

    @property
    def summary(self) -> dict[str, int]:
        """Counts over top-level checks only."""
        passed = sum(1 for c in self.checks if c.passed)
        return {
            "total": len(self.checks),
            "passed": passed,
            "failed": len(self.checks) - passed,
            "expected_failures": sum(1 for c in self.checks if not c.passed and c.expected == EXPECT_FAIL),
            "unexpected": sum(1 for c in self.checks if not c.as_expected),
        }

    @property
    def exit_code(self) -> int:
        return 1 if self.summary["unexpected"] else 0

    def as_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "version": self.version,
            "checks": [c.as_dict() for c in self.checks],
            "summary": canonical(self.summary),
        }


def run_tower(config: SuiteConfig, tower: Tower, tower_index: int) -> list[CheckReport]:
    """
    Run every selected suite on one tower, in declared suite order.
    An exception inside a suite becomes a failed "<suite>.error" check.
    """
    out = []
    for name in config.suites:
        suite = SUITES[name](config)
        try:
            out.extend(suite.run(tower, tower_index))
        except Exception as e:
            logger.error(f"Suite {name} failed on tower {tower.spec.label()}: {e}")
            out.append(CheckReport.error(f"{name}.error", e, params={"tower": tower.spec.label()}))
    logger.info(f"Tower {tower.spec.label()}: {len(out)} checks")
    return out


def _run_tower_worker(config: SuiteConfig, tower_index: int) -> list[CheckReport]:
    """Process-pool entry point; rebuilds the tower inside the worker."""
    tower = build_tower(config.towers[tower_index], config.max_group_order)
    return run_tower(config, tower, tower_index)


class SuiteRunner:
    """
    Builds every configured tower up front, then runs the selected suites
    tower by tower, either in-process or across a process pool.
    """

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.towers: list[Tower] = []

    def build_towers(self) -> list[Tower]:
        """
        Raises:
            ConfigError: if a tower cannot be built within the group-order cap
        """
        towers = []
        for spec in self.config.towers:
            try:
                towers.append(build_tower(spec, self.config.max_group_order))
            except TowerError as e:
                raise ConfigError(str(e))
        self.towers = towers
        return towers

    async def _run_parallel(self) -> list[list[CheckReport]]:
        loop = asyncio.get_running_loop()
        with ProcessPoolExecutor() as pool:
            tasks = [
                loop.run_in_executor(pool, _run_tower_worker, self.config, index)
                for index in range(len(self.towers))
            ]
            return await asyncio.gather(*tasks)

    def run(self) -> SuiteReport:
        self.build_towers()
        logger.info(f"Running {[str(s) for s in self.config.suites]} on {len(self.towers)} towers")
        if self.config.parallel and len(self.towers) > 1:
            per_tower = asyncio.run(self._run_parallel())
        else:
            per_tower = [run_tower(self.config, t, i) for i, t in enumerate(self.towers)]
        report = SuiteReport(self.config, [c for checks in per_tower for c in checks])
        logger.info(f"Summary: {report.summary}")
        return report


def run_suite(config: SuiteConfig) -> SuiteReport:
    return SuiteRunner(config).run()
