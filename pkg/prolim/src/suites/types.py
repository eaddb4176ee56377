#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/suites/types.py

from enum import Enum
from typing import Iterable, Union

from prolim.src.errors import ConfigError


class SuiteName(Enum):
    """Verification suites, in the order they run and appear in reports."""
    PROP21 = "prop21"
    XA = "xa"
    NAKAYAMA = "nakayama"
    KAPPA = "kappa"
    TORPM = "torpm"
    FSSCAN = "fsscan"

    @classmethod
    def all_suites(cls) -> list['SuiteName']:
        return list(cls)

    @classmethod
    def get_valid_names(cls) -> set[str]:
        """Accepted names, including the "all" shorthand."""
        return {s.value for s in cls} | {"all"}

    @classmethod
    def from_input(cls, names: Union[str, Iterable[str], None]) -> list['SuiteName']:
        """
        Convert a name, comma-separated string or list of names to suites in
        declared order. "all" expands to every suite.

        Raises:
            ConfigError: on an unknown name
        """
        if names is None:
            return []
        if isinstance(names, str):
            names = names.split(',')
        wanted = set()
        for raw in names:
            if isinstance(raw, SuiteName):
                wanted.add(raw)
                continue
            name = str(raw).strip().lower()
            if not name:
                continue
            if name == "all":
                wanted.update(cls)
            elif name in {s.value for s in cls}:
                wanted.add(cls(name))
            else:
                raise ConfigError(
                    f"Invalid suite name: {raw}. Must be one of: {sorted(cls.get_valid_names())}"
                )
        return [s for s in cls if s in wanted]

    def __str__(self) -> str:
        return self.value
