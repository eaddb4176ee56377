#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/suites/builtin.py

"""The six verification suites and their registry."""

from prolim.src.algebra.tower import (
    ChainTower,
    Tower,
    free_tower,
    mod_p_tower,
    trivial_tower,
    varpi_ideal_tower,
)
from prolim.src.suites.base import BaseSuite
from prolim.src.suites.types import SuiteName
from prolim.src.verify.fsscan import fs_scan
from prolim.src.verify.kappa import check_kappa, check_tor_ppower
from prolim.src.verify.nakayama import nakayama_lift
from prolim.src.verify.prop_ses import verify_prop_ses
from prolim.src.verify.random_cases import random_chain, random_digits, random_module
from prolim.src.verify.report import EXPECT_FAIL, CheckReport
from prolim.src.verify.xa import DigitSequence, build_xa


def _named(report: CheckReport, name: str, **params) -> CheckReport:
    report.name = name
    report.params = {**report.params, **params}
    return report


class Prop21Suite(BaseSuite):
    """Exact-sequence identities for varpi, T and e at every level m >= 1."""
    name = SuiteName.PROP21

    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        return [
            _named(verify_prop_ses(tower, m), f"prop21.level{m}")
            for m in range(1, tower.max_level + 1)
        ]


class XaSuite(BaseSuite):
    """x_a for the configured digit sequences, then for random ones."""
    name = SuiteName.XA

    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        if tower.max_level < 1:
            return []
        out = []
        for k, digits in enumerate(self.config.digits):
            _, report = build_xa(tower, DigitSequence.for_tower(tower, digits))
            out.append(_named(report, f"xa.config{k}"))
        for case in self.random_range():
            _, report = build_xa(tower, random_digits(self.rng(tower_index, case), tower))
            out.append(_named(report, f"xa.random{case}"))
        return out


class NakayamaSuite(BaseSuite):
    """
    Generator lifting on the free, trivial and R/p towers, which must pass,
    and on the varpi-ideal tower, which must fail at level 1.
    """
    name = SuiteName.NAKAYAMA

    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        out = []
        for build in (free_tower, trivial_tower, mod_p_tower):
            tm = build(tower)
            _, report = nakayama_lift(tm)
            out.append(_named(report, f"nakayama.{tm.name}"))
        if tower.max_level >= 1:
            _, report = nakayama_lift(varpi_ideal_tower(tower))
            report.expected = EXPECT_FAIL
            out.append(_named(report, "nakayama.varpi_ideal"))
        return out


def _chains(suite: BaseSuite, tower: Tower, tower_index: int) -> list[tuple[str, ChainTower]]:
    """Fixed chains on every tower; random chains only on towers with d = 1."""
    config = suite.config
    chains = [(kind, ChainTower.scalar(tower, kind)) for kind in config.chains if kind != "random"]
    if "random" in config.chains and tower.spec.d == 1:
        chains.extend(
            (f"random{case}", random_chain(suite.rng(tower_index, case), tower))
            for case in suite.random_range()
        )
    return chains


class KappaSuite(BaseSuite):
    """kappa_a for a = 0 .. M-1 on the fixed chains and on random chains."""
    name = SuiteName.KAPPA

    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        out = []
        for label, chain in _chains(self, tower, tower_index):
            for a in range(tower.max_level):
                out.append(_named(check_kappa(chain, a), f"kappa.{label}.a{a}"))
        return out


class TorpmSuite(BaseSuite):
    """Tor against R/p^k on R_m/p and on random modules at every level."""
    name = SuiteName.TORPM

    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        out = []
        mod_p = mod_p_tower(tower)
        for m in tower.levels():
            out.append(_named(check_tor_ppower(mod_p.levels[m], tower.p, 1), f"torpm.level{m}.mod_p", level=m))
            for case in self.random_range():
                rng = self.rng(tower_index, case * (tower.max_level + 1) + m)
                M = random_module(rng, tower.group(m))
                k = rng.randint(1, 2)
                out.append(_named(check_tor_ppower(M, tower.p, k), f"torpm.level{m}.random{case}", level=m))
        return out


class FsscanSuite(BaseSuite):
    """Forster-Swan scan over levels 1..M for every configured chain."""
    name = SuiteName.FSSCAN

    def run(self, tower: Tower, tower_index: int) -> list[CheckReport]:
        if tower.max_level < 1:
            return []
        return [
            _named(fs_scan(tower, chain), f"fsscan.{label}")
            for label, chain in _chains(self, tower, tower_index)
        ]


SUITES: dict[SuiteName, type[BaseSuite]] = {
    SuiteName.PROP21: Prop21Suite,
    SuiteName.XA: XaSuite,
    SuiteName.NAKAYAMA: NakayamaSuite,
    SuiteName.KAPPA: KappaSuite,
    SuiteName.TORPM: TorpmSuite,
    SuiteName.FSSCAN: FsscanSuite,
}
