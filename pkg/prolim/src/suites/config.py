#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/suites/config.py

from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Optional

from prolim.src.algebra.tower import CHAIN_KINDS, DEFAULT_MAX_GROUP_ORDER, TowerSpec
from prolim.src.errors import ConfigError, DigitError, TowerError
from prolim.src.suites.types import SuiteName
from prolim.src.verify.report import canonical
from prolim.src.verify.xa import DigitSequence

FORMATS = ("json", "text")

# randomised unless restricted to fixed chains
RANDOMIZED_SUITES = {SuiteName.XA, SuiteName.KAPPA, SuiteName.TORPM}

# random cases per tower when random_cases is unset: digit sequences for xa,
# modules per level for torpm, chains for kappa and fsscan
DEFAULT_RANDOM_CASES = {
    SuiteName.XA: 20,
    SuiteName.TORPM: 20,
    SuiteName.KAPPA: 10,
    SuiteName.FSSCAN: 10,
}

DEFAULT_TOWERS = (
    {"p": 2, "d": 1, "M": 5},
    {"p": 3, "d": 1, "M": 3},
    {"p": 5, "d": 1, "M": 2},
    {"p": 2, "d": 2, "M": 3},
    {"p": 3, "d": 2, "M": 2},
)

TOWER_KEYS = {"p", "d", "M", "max_level", "pi", "pi_coordinate", "schedule"}


def _as_int(name: str, value: Any) -> int:
    """Accept ints or decimal strings."""
    if isinstance(value, bool):
        raise ConfigError(f"{name} must be an integer, got {value!r}")
    try:
        return int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{name} must be an integer, got {value!r}")


@dataclass
class SuiteConfig:
    """Which suites run on which towers, and how the report is written."""
    towers: list[TowerSpec] = field(default_factory=list)
    suites: list[SuiteName] = field(default_factory=list)

    # inputs for the individual suites
    digits: list[list[int]] = field(default_factory=list)
    chains: list[str] = field(default_factory=lambda: list(CHAIN_KINDS))
    seed: Optional[int] = None
    random_cases: Optional[int] = None

    # output and execution
    output: Optional[Path] = None
    format: str = "json"
    max_group_order: int = DEFAULT_MAX_GROUP_ORDER
    parallel: bool = False

    def __post_init__(self):
        """Normalise field types, then validate."""
        try:
            self.towers = [t if isinstance(t, TowerSpec) else TowerSpec.from_dict(t) for t in self.towers]
        except TowerError as e:
            raise ConfigError(f"Invalid tower: {e}")
        except (TypeError, AttributeError):
            raise ConfigError(f"Towers must be a list of mappings, got {self.towers!r}")
        self.suites = SuiteName.from_input(self.suites)
        if isinstance(self.chains, str):
            self.chains = [c.strip() for c in self.chains.split(',') if c.strip()]
        self.chains = [str(c).strip().lower() for c in self.chains]
        self.digits = [[_as_int("digit", a) for a in seq] for seq in self.digits]
        if self.seed is not None:
            self.seed = _as_int("seed", self.seed)
        if self.random_cases is not None:
            self.random_cases = _as_int("random_cases", self.random_cases)
        self.max_group_order = _as_int("max_group_order", self.max_group_order)
        if self.output is not None and not isinstance(self.output, Path):
            self.output = Path(self.output)
        self.format = str(self.format).lower()
        self._validate_config()

    def _validate_config(self) -> None:
        """
        Validate configuration settings.

        Raises:
            ConfigError: If configuration is invalid
        """
        if self.format not in FORMATS:
            raise ConfigError(f"Invalid format: {self.format}. Must be one of: {list(FORMATS)}")

        unknown = [c for c in self.chains if c not in CHAIN_KINDS]
        if unknown:
            raise ConfigError(f"Invalid chains: {unknown}. Must be among: {list(CHAIN_KINDS)}")

        if self.random_cases is not None and self.random_cases < 0:
            raise ConfigError("random_cases must be non-negative")

        if self.max_group_order < 1:
            raise ConfigError("max_group_order must be positive")

        for spec in self.towers:
            if spec.top_order() > self.max_group_order:
                raise ConfigError(
                    f"Tower {spec.label()} has top group order {spec.top_order()} "
                    f"above the cap {self.max_group_order}"
                )

        if self.needs_seed and self.seed is None:
            raise ConfigError(
                f"A seed is required for randomised suites: {[str(s) for s in self.randomized_suites]}"
            )

        if SuiteName.XA in self.suites:
            for spec in self.towers:
                if spec.max_level < 1:
                    continue
                for seq in self.digits:
                    try:
                        DigitSequence.for_spec(spec, seq)
                    except DigitError as e:
                        raise ConfigError(f"Digits {seq} do not fit tower {spec.label()}: {e}")

    @property
    def randomized_suites(self) -> list[SuiteName]:
        out = [s for s in self.suites if s in RANDOMIZED_SUITES]
        if SuiteName.FSSCAN in self.suites and "random" in self.chains:
            out.append(SuiteName.FSSCAN)
        return out

    def cases_for(self, suite: SuiteName) -> int:
        """Random cases per tower for one suite; random_cases overrides the defaults."""
        if self.random_cases is not None:
            return self.random_cases
        return DEFAULT_RANDOM_CASES.get(suite, 0)

    @property
    def needs_seed(self) -> bool:
        return any(self.cases_for(s) > 0 for s in self.randomized_suites)

    @classmethod
    def default(cls) -> "SuiteConfig":
        """Every suite on the default towers with seed 0."""
        return cls(towers=[dict(t) for t in DEFAULT_TOWERS], suites=["all"], seed=0)

    @classmethod
    def from_dict(cls, data: dict) -> "SuiteConfig":
        """
        Build from a parsed JSON mapping. A mapping with tower keys at the top
        level (p, d, M, ...) describes a single tower.

        Raises:
            ConfigError: on unknown keys or invalid values
        """
        if not isinstance(data, dict):
            raise ConfigError(f"Configuration must be a mapping, got {type(data).__name__}")
        data = dict(data)
        inline = {k: data.pop(k) for k in list(data) if k in TOWER_KEYS}
        if inline:
            if "towers" in data:
                raise ConfigError("Give either a towers list or inline tower keys, not both")
            data["towers"] = [inline]
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"Invalid configuration keys: {sorted(unknown)}")
        if "parallel" in data and not isinstance(data["parallel"], bool):
            raise ConfigError("parallel must be true or false")
        return cls(**data)

    def update(self, **kwargs) -> None:
        """
        Update configuration with validation.

        Raises:
            ConfigError: If invalid configuration provided
        """
        for key, value in kwargs.items():
            if not hasattr(self, key):
                raise ConfigError(f"Invalid configuration attribute: {key}")
            setattr(self, key, value)
        self.__post_init__()

    def as_dict(self) -> dict:
        """Canonical mapping; from_dict(as_dict()) rebuilds an equal config."""
        return canonical({
            "towers": [t.as_dict() for t in self.towers],
            "suites": [s.value for s in self.suites],
            "digits": self.digits,
            "chains": self.chains,
            "seed": self.seed,
            "random_cases": self.random_cases,
            "output": str(self.output) if self.output is not None else None,
            "format": self.format,
            "max_group_order": self.max_group_order,
            "parallel": self.parallel,
        })

    def __str__(self) -> str:
        return (
            f"SuiteConfig("
            f"towers={[t.label() for t in self.towers]}, "
            f"suites={[s.value for s in self.suites]}, "
            f"chains={self.chains}, "
            f"seed={self.seed}, "
            f"random_cases={self.random_cases}, "
            f"format={self.format}, "
            f"max_group_order={self.max_group_order}, "
            f"parallel={self.parallel}"
            f")"
        )
