#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/suites/base.py

import random
from abc import ABC, abstractmethod

from prolim.src.algebra.tower import Tower
from prolim.src.suites.config import SuiteConfig
from prolim.src.suites.types import SuiteName
from prolim.src.verify.random_cases import case_rng
from prolim.src.verify.report import CheckReport


class BaseSuite(ABC):
    """
    Abstract base class for verification suites.
    A suite turns one tower into an ordered list of check reports.
    """

    name: SuiteName

    def __init__(self, config: SuiteConfig):
        self.config = config

    @abstractmethod
    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        """
        Run every check of the suite on one tower.

        Args:
            tower (Tower): the tower to verify
            tower_index (int): position of the tower in the config, part of the random seed
        """

    def rng(self, tower_index: int, case: int) -> random.Random:
        """Random stream for one randomised case."""
        return case_rng(self.config.seed or 0, self.name.value, tower_index, case)

    def random_range(self) -> range:
        return range(self.config.cases_for(self.name) if self.config.seed is not None else 0)
