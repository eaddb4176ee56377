#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/xa.py

"""
The compatible family x_a = (varpi_m y_(a,m))_m attached to a p-adic digit
expansion a = sum a_i p^n_i.

y_(a,m) = sum_(j<m) a_j T_(m,j). It is a non-zero divisor in R_m exactly when
a_0 != 0: for a_0 = 0 every term is divisible by T_(m,1), which the
characters of order p kill.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from prolim.src.algebra.fpmod import ModuleMap, flatten_vector, preimage_lattice, submodule_lattice
from prolim.src.algebra.groupring import GroupRingElement, augmentation, is_non_zero_divisor, push
from prolim.src.algebra.tower import Tower, TowerElement, TowerSpec
from prolim.src.errors import DigitError
from prolim.src.verify.report import EXPECT_FAIL, EXPECT_PASS, CheckReport, check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DigitSequence:
    """
    Digits a_0 ... a_(M-1) with 0 <= a_i < p^(n_(i+1) - n_i), not all zero.

    Raises:
        DigitError: on a bound violation, an all-zero sequence or a short schedule
    """
    p: int
    digits: tuple[int, ...]
    schedule: tuple[int, ...]

    def __post_init__(self):
        digits = tuple(int(a) for a in self.digits)
        schedule = tuple(int(n) for n in self.schedule)
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "schedule", schedule)
        if len(schedule) < len(digits) + 1:
            raise DigitError(f"{len(digits)} digits need {len(digits) + 1} schedule entries, got {schedule}")
        for i, a in enumerate(digits):
            bound = self.radix(i)
            if not 0 <= a < bound:
                raise DigitError(f"Digit a_{i} = {a} outside 0..{bound - 1}")
        if not any(digits):
            raise DigitError("At least one digit must be nonzero")

    def radix(self, i: int) -> int:
        return self.p ** (self.schedule[i + 1] - self.schedule[i])

    @property
    def value(self) -> int:
        """sum a_i p^n_i, the truncated p-adic integer."""
        return sum(a * self.p ** self.schedule[i] for i, a in enumerate(self.digits))

    @classmethod
    def from_padic(cls, p: int, value: int, schedule: Sequence[int], levels: int) -> "DigitSequence":
        """Mixed-radix digits of value mod p^n_levels (negative values are reduced first)."""
        schedule = tuple(schedule)
        if len(schedule) < levels + 1:
            raise DigitError(f"Schedule {schedule} is too short for {levels} digits")
        rest = value % p ** schedule[levels]
        digits = []
        for i in range(levels):
            radix = p ** (schedule[i + 1] - schedule[i])
            rest, a = divmod(rest, radix)
            digits.append(a)
        return cls(p, tuple(digits), schedule[:levels + 1])

    @classmethod
    def for_spec(cls, spec: TowerSpec, digits: Sequence[int]) -> "DigitSequence":
        """Truncate or zero-pad to the tower's depth M."""
        depth = spec.max_level
        digits = (tuple(int(a) for a in digits) + (0,) * depth)[:depth]
        return cls(spec.p, digits, spec.exponents)

    @classmethod
    def for_tower(cls, tower: Tower, digits: Sequence[int]) -> "DigitSequence":
        return cls.for_spec(tower.spec, digits)

    def as_dict(self) -> dict:
        return {"p": self.p, "digits": list(self.digits), "schedule": list(self.schedule)}


def y_element(tower: Tower, a: DigitSequence, m: int) -> GroupRingElement:
    """y_(a,m) = sum_(j<m) a_j T_(m,j)."""
    out = GroupRingElement.zero(tower.group(m))
    for j in range(min(m, len(a.digits))):
        if a.digits[j]:
            out = out + tower.partial(m, j).scale(a.digits[j])
    return out


def build_xa(tower: Tower, a: DigitSequence) -> tuple[TowerElement, CheckReport]:
    """
    Build x_a and check (a) compatibility, (b) the connecting identity
    y_(a,m) - rho(y_(a,m+1)) = -a_m T_m, (c) y_(a,m) is a non-zero divisor,
    (d) the augmentation of y_(a,m) and (e) ann(x_(a,m)) = R_m T_m.

    Checks (c) and (e) are expected to fail when a_0 = 0.
    """
    if a.p != tower.p or len(a.digits) > tower.max_level:
        raise DigitError(f"Digits {a.as_dict()} do not fit tower {tower.spec.label()}")
    p = tower.p
    ys = [y_element(tower, a, m) for m in tower.levels()]
    x = TowerElement(tower, tuple(tower.varpi(m) * y for m, y in enumerate(ys)))

    def digit(j: int) -> int:
        return a.digits[j] if j < len(a.digits) else 0

    bad = x.incompatible_levels()
    children = [check("compatible", not bad, levels=bad)]

    connecting = []
    for m in range(tower.max_level):
        lhs = ys[m] - push(tower.rho(m + 1), ys[m + 1])
        rhs = tower.trace(m).scale(-digit(m))
        if lhs != rhs:
            connecting.append({"level": m, "got": str(lhs), "expected": str(rhs)})
    children.append(check("connecting_identity", not connecting, mismatches=connecting))

    expected = EXPECT_PASS if digit(0) else EXPECT_FAIL
    zero_divisors = [m for m in range(1, tower.max_level + 1) if not is_non_zero_divisor(ys[m])]
    nzd = check("non_zero_divisor", not zero_divisors, levels=zero_divisors)
    nzd.expected = expected
    children.append(nzd)

    wrong = []
    for m in tower.levels():
        target = sum(digit(j) * p ** tower.n(j) for j in range(m))
        if augmentation(ys[m]) != target:
            wrong.append({"level": m, "got": augmentation(ys[m]), "expected": target})
    children.append(check("augmentation", not wrong, mismatches=wrong))

    ann_bad = []
    for m in range(1, tower.max_level + 1):
        R = tower.ring(m)
        kernel = preimage_lattice(ModuleMap.multiplication(R, x.levels[m]).flat_matrix, ())
        trace_lattice = submodule_lattice(R.group, [flatten_vector((tower.trace(m),))], R.dim)
        if kernel != trace_lattice:
            ann_bad.append({"level": m, "rank": len(kernel)})
    ann = check("annihilator", not ann_bad, mismatches=ann_bad)
    ann.expected = expected
    children.append(ann)

    report = CheckReport.aggregate(
        "xa", children, params={"tower": tower.spec.label(), "digits": list(a.digits)}, expected=expected
    )
    logger.debug(f"x_a for digits {a.digits}: {'pass' if report.passed else 'fail'}")
    return x, report
