#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/random_cases.py

"""
Seeded random inputs for the randomised suites.

Every generator takes a random.Random built by case_rng, whose string seed
"{seed}:{suite}:{tower_index}:{case}" is hashed with SHA-512 by the standard
library, so the streams are the same on every platform.
"""

from __future__ import annotations

import random

from prolim.src.algebra.fpmod import FPModule
from prolim.src.algebra.groupring import FiniteAbelianGroup, GroupRingElement
from prolim.src.algebra.tower import ChainTower, Tower
from prolim.src.verify.xa import DigitSequence


def case_rng(seed: int, suite: str, tower_index: int, case: int) -> random.Random:
    return random.Random(f"{seed}:{suite}:{tower_index}:{case}")


def random_element(rng: random.Random, group: FiniteAbelianGroup, height: int = 2, density: float = 0.5) -> GroupRingElement:
    """Coefficients in [-height, height], each group element kept with probability `density`."""
    coeffs = tuple(
        rng.randint(-height, height) if rng.random() < density else 0 for _ in range(group.order)
    )
    return GroupRingElement(group, coeffs)


def random_module(
    rng: random.Random, group: FiniteAbelianGroup, max_gens: int = 2, max_relations: int = 2
) -> FPModule:
    """A module with 1..max_gens generators and 0..max_relations random relation columns."""
    n_gens = rng.randint(1, max_gens)
    n_rels = rng.randint(0, max_relations)
    relations = [
        tuple(random_element(rng, group) for _ in range(n_gens)) for _ in range(n_rels)
    ]
    return FPModule(group, n_gens, tuple(relations))


def random_chain(rng: random.Random, tower: Tower) -> ChainTower:
    return ChainTower.random(tower, rng)


def random_digits(rng: random.Random, tower: Tower) -> DigitSequence:
    """Valid digits for the tower with a_0 >= 1, so y_(a,m) is a non-zero divisor."""
    exponents = tower.spec.exponents
    digits = []
    for i in range(tower.max_level):
        radix = tower.p ** (exponents[i + 1] - exponents[i])
        digits.append(rng.randint(1 if i == 0 else 0, radix - 1))
    return DigitSequence(tower.p, tuple(digits), exponents)
