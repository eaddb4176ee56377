#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/report.py

"""Check reports: pass flag, expectation, parameters and witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Iterator, Sequence

from prolim.src.algebra.groupring import GroupRingElement
from prolim.src.algebra.zlinalg import AbelianInvariants, IntMatrix

EXPECT_PASS = "pass"
EXPECT_FAIL = "fail"


def canonical(value: Any) -> Any:
    """
    Convert a value to the report's canonical JSON form.

    Integers become decimal strings, invariants become lists of decimal
    strings and floats are rejected.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        raise TypeError("Reports never carry floating point values")
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, AbelianInvariants):
        return value.as_strings()
    if isinstance(value, IntMatrix):
        return [[str(x) for x in value.row(i)] for i in range(value.rows)]
    if isinstance(value, GroupRingElement):
        return [canonical(c) for c in value.coeffs]
    if isinstance(value, dict):
        return {str(k): canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    if hasattr(value, "as_dict"):
        return canonical(value.as_dict())
    return str(value)


@dataclass
class CheckReport:
    """
    Result of one named check.

    `expected` is "pass" for ordinary checks and "fail" for negative
    examples; only a mismatch between outcome and expectation is an error.
    """
    name: str
    passed: bool
    params: dict = field(default_factory=dict)
    witness: dict = field(default_factory=dict)
    children: list["CheckReport"] = field(default_factory=list)
    expected: str = EXPECT_PASS

    @classmethod
    def aggregate(
        cls,
        name: str,
        children: Sequence["CheckReport"],
        params: dict | None = None,
        witness: dict | None = None,
        expected: str = EXPECT_PASS,
    ) -> "CheckReport":
        """A report that passes when every child passes."""
        return cls(
            name=name,
            passed=all(c.passed for c in children),
            params=params or {},
            witness=witness or {},
            children=list(children),
            expected=expected,
        )

    @classmethod
    def error(cls, name: str, exc: BaseException, params: dict | None = None) -> "CheckReport":
        return cls(
            name=name,
            passed=False,
            params=params or {},
            witness={"error": type(exc).__name__, "message": str(exc)},
        )

    @property
    def as_expected(self) -> bool:
        return self.passed == (self.expected == EXPECT_PASS)

    def failed_children(self) -> list["CheckReport"]:
        return [c for c in self.children if not c.passed]

    def walk(self) -> Iterator["CheckReport"]:
        yield self
        for child in self.children:
            yield from child.walk()

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "params": canonical(self.params),
            "witness": canonical(self.witness),
            "children": [c.as_dict() for c in self.children],
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}"


def check(name: str, passed: bool, **witness) -> CheckReport:
    """Leaf report; the witness is only kept when the check fails."""
    return CheckReport(name=name, passed=bool(passed), witness={} if passed else witness)
