#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/test_homology.py

import random

import pytest

from prolim.src.algebra.fpmod import FPModule, free_resolution
from prolim.src.algebra.groupring import FiniteAbelianGroup, GroupRingElement, Subgroup
from prolim.src.algebra.homology import (
    flat_homology_h1,
    homology_h1,
    tor_basechange,
    tor_mod,
    torsion_part,
)
from prolim.src.algebra.zlinalg import AbelianInvariants
from prolim.src.errors import DimensionError, RingMismatchError
from prolim.src.verify.random_cases import random_module


def _trivial(group, n=0):
    one = GroupRingElement.one(group)
    rels = [GroupRingElement.basis(group, group.generator(i)) - one for i in range(group.rank)]
    if n:
        rels.append(one.scale(n))
    return FPModule.cyclic(group, rels)


@pytest.mark.parametrize("degree,expected", [
    (0, AbelianInvariants(1, ())),
    (1, AbelianInvariants(0, (4,))),
    (2, AbelianInvariants()),
    (3, AbelianInvariants(0, (4,))),
])
def test_cyclic_group_homology_is_periodic(c4, degree, expected):
    delta = Subgroup.whole(c4)
    assert tor_basechange(degree, delta, _trivial(c4)) == expected


def test_homology_of_trivial_mod_n(c4):
    delta = Subgroup.whole(c4)
    assert tor_basechange(1, delta, _trivial(c4, 2)) == AbelianInvariants(0, (2,))
    assert homology_h1(delta, _trivial(c4, 2)) == AbelianInvariants(0, (2,))


def test_free_module_is_acyclic(c4):
    delta = Subgroup.whole(c4)
    R = FPModule.free(c4, 1)
    assert tor_basechange(1, delta, R).is_zero
    assert homology_h1(delta, R).is_zero
    assert tor_basechange(0, delta, R) == AbelianInvariants(1, ())


def test_h1_agrees_with_tor1_on_klein_group(c2xc2):
    delta = Subgroup.whole(c2xc2)
    Z = _trivial(c2xc2)
    assert homology_h1(delta, Z) == AbelianInvariants(0, (2, 2))
    assert tor_basechange(1, delta, Z) == homology_h1(delta, Z)


def test_h1_of_proper_subgroup(c4):
    delta = Subgroup(c4, ((2,),))
    Z = _trivial(c4)
    assert homology_h1(delta, Z) == AbelianInvariants(0, (2,))
    assert tor_basechange(1, delta, Z) == AbelianInvariants(0, (2,))


def test_h1_of_trivial_subgroup_vanishes(c4):
    assert homology_h1(Subgroup.trivial(c4), _trivial(c4)).is_zero


def test_tor_against_r_mod_n(c2xc2):
    M = _trivial(c2xc2, 4)
    assert tor_mod(0, M, 2) == AbelianInvariants(0, (2,))
    assert tor_mod(1, M, 2) == torsion_part(M, 2) == AbelianInvariants(0, (2,))
    assert tor_mod(2, M, 2).is_zero
    assert tor_mod(1, _trivial(c2xc2), 2).is_zero


def test_torsion_part():
    M = _trivial(FiniteAbelianGroup((2,)), 12)
    assert torsion_part(M, 4) == AbelianInvariants(0, (4,))
    assert torsion_part(M, 9) == AbelianInvariants(0, (3,))
    with pytest.raises(DimensionError):
        torsion_part(M, 0)


def test_negative_degree_rejected(c4):
    with pytest.raises(DimensionError):
        tor_basechange(-1, Subgroup.whole(c4), _trivial(c4))
    with pytest.raises(DimensionError):
        tor_mod(1, _trivial(c4), 0)


@pytest.mark.parametrize("n", [2, 3, 4, 9])
@pytest.mark.parametrize("degree", [0, 1, 2, 3, 4])
def test_tor_of_trivial_module_matches_periodic_resolution(n, degree):
    group = FiniteAbelianGroup((n,))
    if degree == 0:
        expected = AbelianInvariants(1, ())
    elif degree % 2:
        expected = AbelianInvariants(0, (n,))
    else:
        expected = AbelianInvariants()
    assert tor_basechange(degree, Subgroup.whole(group), _trivial(group)) == expected


@pytest.mark.parametrize("orders, delta_gens", [
    ((4,), ((1,),)),
    ((2, 2), ((1, 0), (0, 1))),
    ((9,), ((1,),)),
    ((8,), ((4,),)),
    ((4, 2), ((2, 1),)),
])
def test_h1_agrees_with_tor1_on_random_modules(orders, delta_gens):
    group = FiniteAbelianGroup(orders)
    delta = Subgroup(group, delta_gens)
    rng = random.Random(sum(orders))
    for _ in range(20):
        M = random_module(rng, group)
        assert homology_h1(delta, M) == tor_basechange(1, delta, M)


def test_flat_h1_shortcuts(c2xc2):
    delta = Subgroup.whole(c2xc2)
    assert flat_homology_h1(delta, (), 8).is_zero
    everything = tuple(tuple(1 if i == j else 0 for i in range(4)) for j in range(4))
    assert flat_homology_h1(delta, everything, 4).is_zero


def test_h1_of_sign_module(c4):
    sign = FPModule.cyclic(c4, [GroupRingElement.basis(c4, (1,)) + GroupRingElement.one(c4)])
    # g acts by -1, so (Z^-)^G = 0; g^2 acts trivially
    assert homology_h1(Subgroup.whole(c4), sign) == AbelianInvariants()
    assert homology_h1(Subgroup(c4, ((2,),)), sign) == AbelianInvariants(0, (2,))


def test_tor_mod_shares_a_resolution(c2xc2):
    M = _trivial(c2xc2, 4)
    res = free_resolution(M, 3)
    assert tor_mod(1, M, 2, res) == tor_mod(1, M, 2)
    assert tor_mod(2, M, 2, res).is_zero
    with pytest.raises(RingMismatchError):
        tor_mod(1, _trivial(c2xc2), 2, res)
