#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/test_groupring.py

import random
from fractions import Fraction

import pytest

from prolim.src.algebra.groupring import (
    RAT,
    BaseRing,
    FiniteAbelianGroup,
    GroupHom,
    GroupRingElement,
    Subgroup,
    augmentation,
    character_quotient,
    character_quotients,
    is_non_zero_divisor,
    norm_element,
    partial_trace,
    push,
    regular_matrix,
    rel_aug_ideal,
    subgroup_idempotent,
)
from prolim.src.errors import RingMismatchError


def test_group_basics(c2xc2):
    assert c2xc2.order == 4
    assert c2xc2.rank == 2
    assert c2xc2.add((1, 0), (1, 1)) == (0, 1)
    assert c2xc2.element_order((1, 1)) == 2
    assert str(c2xc2) == "C2 x C2"
    assert str(FiniteAbelianGroup(())) == "1"


def test_multiplication_is_convolution(c4):
    g = GroupRingElement.basis(c4, (1,))
    one = GroupRingElement.one(c4)
    assert g * g * g * g == one
    varpi = g - one
    trace = partial_trace(c4, (1,), 4)
    assert (varpi * trace).is_zero()
    assert augmentation(trace) == 4


def test_mismatched_groups_rejected(c4, c2xc2):
    with pytest.raises(RingMismatchError):
        GroupRingElement.one(c4) + GroupRingElement.one(c2xc2)
    with pytest.raises(RingMismatchError):
        GroupRingElement(c4, (1, 2))


def test_regular_matrix_multiplies(c4):
    a = GroupRingElement(c4, (1, 2, 0, -1))
    b = GroupRingElement(c4, (0, 1, 3, 0))
    assert regular_matrix(a).apply(b.coeffs) == (a * b).coeffs


def test_non_zero_divisors(c4):
    one = GroupRingElement.one(c4)
    g = GroupRingElement.basis(c4, (1,))
    assert is_non_zero_divisor(one.scale(3))
    assert not is_non_zero_divisor(g - one)
    assert not is_non_zero_divisor(partial_trace(c4, (1,), 4))
    # 1 + pi: kills the sign character of C4
    assert not is_non_zero_divisor(one + g)
    assert is_non_zero_divisor(one.scale(2) + g)


def test_base_rings(c4):
    mod3 = BaseRing.int_mod(3)
    a = GroupRingElement(c4, (4, 5, -1, 0), mod3)
    assert a.coeffs == (1, 2, 2, 0)
    assert mod3.inverse(2) == 2
    e = partial_trace(c4, (1,), 4).to_base(RAT).scale(Fraction(1, 4))
    assert e * e == e
    with pytest.raises(RingMismatchError):
        BaseRing.int_mod(1)
    with pytest.raises(RingMismatchError):
        BaseRing.integers().inverse(2)


def test_push_along_projection():
    c8, c4 = FiniteAbelianGroup((8,)), FiniteAbelianGroup((4,))
    rho = GroupHom(c8, c4, ((1,),))
    trace8 = partial_trace(c8, (1,), 8)
    assert push(rho, trace8) == partial_trace(c4, (1,), 4).scale(2)
    with pytest.raises(RingMismatchError):
        GroupHom(c4, c8, ((1,),))


def test_subgroup_from_kernel():
    c8, c4 = FiniteAbelianGroup((8,)), FiniteAbelianGroup((4,))
    delta = Subgroup.from_kernel(GroupHom(c8, c4, ((1,),)))
    assert delta.order == 2
    assert delta.contains((4,))
    assert not delta.contains((2,))
    assert delta.quotient.target == c4
    assert norm_element(delta) == GroupRingElement.one(c8) + GroupRingElement.basis(c8, (4,))
    assert len(rel_aug_ideal(delta)) == 1
    e = subgroup_idempotent(delta)
    assert e * e == e


def test_subgroup_quotient_in_smith_coordinates(c2xc2):
    delta = Subgroup(c2xc2, ((1, 1),))
    q = delta.quotient
    assert q.target.order == 2
    assert q.apply((1, 1)) == q.target.identity
    assert q.is_surjective()


def test_character_quotients_cover_distinct_kernels(c2xc2, c4):
    assert len(character_quotients(c2xc2)) == 4
    assert sorted(hom.target.order for _, hom in character_quotients(c4)) == [1, 2, 4]


def test_small_characters_keep_their_order():
    c9 = FiniteAbelianGroup((9,))
    assert sorted(hom.target.order for _, hom in character_quotients(c9)) == [1, 3, 9]
    sign = character_quotient(FiniteAbelianGroup((4,)), (2,))
    assert sign.target.order == 2
    assert sign.apply((1,)) == (1,)
    assert sign.apply((2,)) == (0,)


def test_cyclic_decomposition(c2xc2):
    klein = Subgroup.whole(c2xc2)
    assert sorted(n for _, n in klein.cyclic_decomposition) == [2, 2]
    c4xc2 = FiniteAbelianGroup((4, 2))
    delta = Subgroup(c4xc2, ((1, 1), (2, 0)))
    factors = delta.cyclic_decomposition
    assert [n for _, n in factors] == [4]
    assert Subgroup(c4xc2, tuple(h for h, _ in factors)).order == delta.order
    assert Subgroup.trivial(c4xc2).cyclic_decomposition == ()


@pytest.mark.parametrize("p, max_exponent", [(2, 3), (3, 2)])
def test_ring_axioms_on_random_triples(p, max_exponent):
    rng = random.Random(p)
    for _ in range(100):
        m = rng.randint(1, max_exponent)
        group = FiniteAbelianGroup((p ** m,))
        a, b, c = (
            GroupRingElement(group, tuple(rng.randint(-5, 5) for _ in range(group.order)))
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a * b == b * a
        if m > 1:
            rho = GroupHom(group, FiniteAbelianGroup((p ** (m - 1),)), ((1,),))
            assert push(rho, a * b) == push(rho, a) * push(rho, b)
            assert push(rho, a + c) == push(rho, a) + push(rho, c)
            assert push(rho, GroupRingElement.one(group)) == GroupRingElement.one(rho.target)
