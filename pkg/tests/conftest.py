#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/conftest.py

import logging

import pytest

from prolim.src.algebra.groupring import FiniteAbelianGroup
from prolim.src.algebra.tower import TowerSpec, build_tower


@pytest.fixture
def c4():
    return FiniteAbelianGroup((4,))


@pytest.fixture
def c2xc2():
    return FiniteAbelianGroup((2, 2))


@pytest.fixture
def tower_2_1_3():
    return build_tower(TowerSpec(p=2, d=1, max_level=3))


@pytest.fixture
def tower_3_1_2():
    return build_tower(TowerSpec(p=3, d=1, max_level=2))


@pytest.fixture
def tower_3_1_3():
    return build_tower(TowerSpec(p=3, d=1, max_level=3))


@pytest.fixture
def tower_2_2_2():
    return build_tower(TowerSpec(p=2, d=2, max_level=2))


@pytest.fixture(autouse=True)
def quiet_package_logger():
    """Keep handlers installed by one test from leaking into the next."""
    yield
    logger = logging.getLogger("prolim")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
