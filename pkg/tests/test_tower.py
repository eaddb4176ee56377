#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/test_tower.py

import random

import pytest

from prolim.src.algebra.fpmod import is_injective, is_surjective
from prolim.src.algebra.groupring import GroupRingElement, augmentation, gr_mul, push
from prolim.src.algebra.tower import (
    ChainTower,
    TowerElement,
    TowerSpec,
    build_tower,
    e_module,
    free_tower,
    ideal_I_varpi,
    kernel_tower,
    mod_p_tower,
    q_module,
    q_module_by_p_power,
    trivial_tower,
    varpi_ideal_tower,
)
from prolim.src.algebra.zlinalg import AbelianInvariants
from prolim.src.errors import IllDefinedMapError, TowerError


def test_spec_validation():
    with pytest.raises(TowerError):
        TowerSpec(p=4)
    with pytest.raises(TowerError):
        TowerSpec(p=2, d=0)
    with pytest.raises(TowerError):
        TowerSpec(p=2, d=1, max_level=2, schedule=(0, 2, 2))
    with pytest.raises(TowerError):
        TowerSpec(p=2, d=2, max_level=2, schedule=(0, 1, 3))
    with pytest.raises(TowerError):
        TowerSpec.from_dict({"p": 2, "q": 1})


def test_spec_round_trip_and_label():
    spec = TowerSpec.from_dict({"p": 3, "M": 2, "schedule": [0, 1, 3]})
    assert spec.exponents == (0, 1, 3)
    assert spec.top_order() == 27
    assert spec.label() == "p=3,d=1,M=2,n=0/1/3"
    assert TowerSpec.from_dict(spec.as_dict()) == spec


def test_build_respects_order_cap():
    with pytest.raises(TowerError):
        build_tower(TowerSpec(p=2, d=2, max_level=4), max_group_order=128)
    tower = build_tower(TowerSpec(p=2, d=2, max_level=3))
    assert tower.group(3).order == 64


def test_tower_identities(tower_2_1_3):
    t = tower_2_1_3
    assert t.trace(0) == t.one(0)
    assert t.varpi(0).is_zero()
    for m in range(1, t.max_level + 1):
        assert gr_mul(t.varpi(m), t.trace(m)).is_zero()
        assert push(t.rho(m), t.trace(m)) == t.trace(m - 1).scale(2)
        assert t.delta(m).order == 2
    assert augmentation(t.partial(3, 2)) == 4
    with pytest.raises(TowerError):
        t.group(4)
    with pytest.raises(TowerError):
        t.rho(0)


def test_custom_schedule_tower():
    t = build_tower(TowerSpec(p=2, max_level=2, schedule=(0, 1, 3)))
    assert t.group(2).order == 8
    assert t.delta(2).order == 4
    assert push(t.rho(2), t.trace(2)) == t.trace(1).scale(4)


def test_tower_elements(tower_3_1_2):
    varpi = TowerElement.of(tower_3_1_2, tower_3_1_2.varpi)
    assert varpi.is_compatible()
    bad = TowerElement(tower_3_1_2, (tower_3_1_2.one(0), tower_3_1_2.one(1), tower_3_1_2.varpi(2)))
    assert bad.incompatible_levels() == [1]
    with pytest.raises(TowerError):
        TowerElement(tower_3_1_2, (tower_3_1_2.one(0),))


def test_free_and_trivial_towers_are_pro_discrete(tower_2_1_3):
    for tm in (free_tower(tower_2_1_3), trivial_tower(tower_2_1_3), mod_p_tower(tower_2_1_3)):
        assert all(tm.surjective_transitions())
        assert tm.check_pro_discrete() == []


def test_varpi_ideal_base_change_defect(tower_2_1_3):
    tm = varpi_ideal_tower(tower_2_1_3)
    iso, kernel = tm.base_change_defect(0)
    assert not iso
    assert kernel == AbelianInvariants(0, (2,))


def test_e_and_q_modules(tower_3_1_2):
    t = tower_3_1_2
    # R_m e_m is Z with trivial action
    assert e_module(t, 2).invariants == (1, ())
    assert q_module(t, 2).order() == 9
    assert q_module(t, 2).same_presentation(q_module_by_p_power(t, 2))
    with pytest.raises(TowerError):
        q_module(t, 0)


def test_scalar_chains(tower_3_1_2):
    varpi = ChainTower.scalar(tower_3_1_2, "varpi")
    K, _ = varpi.kernel(2)
    assert K.invariants == (1, ())
    assert varpi.quotient(2).invariants == (8, ())
    identity = ChainTower.scalar(tower_3_1_2, "identity")
    assert identity.kernel(1)[0].n_gens == 0
    with pytest.raises(TowerError):
        ChainTower.scalar(tower_3_1_2, "random")


def test_random_chain_is_compatible(tower_2_2_2):
    chain = ChainTower.random(tower_2_2_2, random.Random(5))
    assert 1 <= chain.t <= 2 and 1 <= chain.s <= 2
    tm = chain.kernel_tower()
    assert len(tm.transitions) == 2


def test_incompatible_chain_rejected(tower_3_1_2):
    t = tower_3_1_2
    matrices = (((t.one(0),),), ((t.one(1),),), ((t.varpi(2),),))
    with pytest.raises(IllDefinedMapError):
        ChainTower(t, "varpi", 1, 1, matrices)


def test_kernel_tower_transitions_land_in_kernels(tower_3_1_2):
    tm = ChainTower.scalar(tower_3_1_2, "p").kernel_tower()
    assert all(K.n_gens == 0 for K in tm.levels)
    tm = ChainTower.scalar(tower_3_1_2, "zero").kernel_tower()
    assert all(is_surjective(f) for f in tm.transitions)
    assert tm.levels[1].invariants == (3, ())


def test_varpi_ideal_levels_zero_and_one(tower_2_1_3):
    zero, embedding = ideal_I_varpi(tower_2_1_3, 0)
    assert zero.is_zero()
    assert embedding.target.n_gens == 1
    ideal, embedding = ideal_I_varpi(tower_2_1_3, 1)
    # Z (g - 1) inside Z[C2]
    assert ideal.invariants == (1, ())
    assert is_injective(embedding)
    assert embedding.columns == ((tower_2_1_3.varpi(1),),)
    with pytest.raises(TowerError):
        ideal_I_varpi(tower_2_1_3, 4)


def test_kernel_tower_is_cached_per_chain(tower_3_1_2):
    chain = ChainTower.scalar(tower_3_1_2, "varpi")
    tm = kernel_tower(chain)
    assert tm is chain.kernel_tower()
    assert tm.name == "ker(varpi)"
    assert [len(L) for L in chain.kernel_lattices] == [1, 1, 1]
