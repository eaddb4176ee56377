#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/test_fpmod.py

import pytest

from prolim.src.algebra.fpmod import (
    FPModule,
    ModuleMap,
    augmentation_submodule,
    coinvariants,
    coker_map,
    compose,
    flatten_vector,
    free_resolution,
    image_module,
    is_exact_at,
    is_injective,
    is_surjective,
    ker_map,
    lift_through,
    submodule_on,
    translate,
    unflatten_vector,
)
from prolim.src.algebra.groupring import (
    FiniteAbelianGroup,
    GroupHom,
    GroupRingElement,
    Subgroup,
    partial_trace,
)
from prolim.src.algebra.zlinalg import AbelianInvariants
from prolim.src.errors import DimensionError, IllDefinedMapError


def _varpi(group):
    return GroupRingElement.basis(group, group.generator(0)) - GroupRingElement.one(group)


def test_free_and_zero_modules(c4):
    R = FPModule.free(c4, 2)
    assert R.dim == 8
    assert R.invariants == (8, ())
    assert R.order() is None
    assert FPModule.zero(c4).is_zero()


def test_trivial_module_is_z(c4):
    Z = FPModule.cyclic(c4, [_varpi(c4)])
    assert Z.invariants == (1, ())
    Z_mod = Z.with_relations([(GroupRingElement.one(c4).scale(4),)])
    assert Z_mod.order() == 4


def test_r_mod_trace_has_rank_three(c4):
    M = FPModule.cyclic(c4, [partial_trace(c4, (1,), 4)])
    assert M.invariants == (3, ())


@pytest.mark.parametrize("n", [2, 3, 5])
def test_flatten_trivial_module(n):
    group = FiniteAbelianGroup((n,))
    Z = FPModule.cyclic(group, [_varpi(group)])
    presentation, actions = Z.flatten()
    assert (presentation.rows, presentation.cols) == (n, n - 1)
    assert AbelianInvariants.of_cokernel(presentation) == AbelianInvariants(1, ())
    assert len(actions) == 1
    g = actions[0]
    for j in range(n):
        e = tuple(1 if i == j else 0 for i in range(n))
        assert Z.contains_zero(tuple(a - b for a, b in zip(g.apply(e), e)))


def test_flat_vectors_and_translation(c4):
    a = GroupRingElement(c4, (1, 2, 0, 0))
    flat = flatten_vector((a,))
    assert unflatten_vector(c4, flat) == (a,)
    assert translate(c4, flat, (1,)) == (0, 1, 2, 0)
    with pytest.raises(DimensionError):
        unflatten_vector(c4, (1, 2, 3))


def test_multiplication_kernel_and_cokernel(c4):
    R = FPModule.free(c4, 1)
    varpi = _varpi(c4)
    mult = ModuleMap.multiplication(R, varpi)
    K, incl = ker_map(mult)
    # ker(varpi) = R * T
    assert K.invariants == (1, ())
    trace = partial_trace(c4, (1,), 4)
    assert K.generates([]) is False
    assert R.with_relations(incl.columns).same_presentation(FPModule.cyclic(c4, [trace]))
    Q, _ = coker_map(mult)
    assert Q.invariants == (1, ())
    assert not is_injective(mult)
    assert not is_surjective(mult)


def test_exactness_of_varpi_and_trace(c4):
    R = FPModule.free(c4, 1)
    varpi = ModuleMap.multiplication(R, _varpi(c4))
    trace = ModuleMap.multiplication(R, partial_trace(c4, (1,), 4))
    assert is_exact_at(trace, varpi)
    assert is_exact_at(varpi, trace)
    with pytest.raises(IllDefinedMapError):
        is_exact_at(ModuleMap.identity(R), varpi)


def test_ill_defined_map_rejected(c4):
    Z = FPModule.cyclic(c4, [_varpi(c4)])
    R = FPModule.free(c4, 1)
    with pytest.raises(IllDefinedMapError):
        ModuleMap(Z, R, ((GroupRingElement.one(c4),),))


def test_submodule_and_image(c4):
    R = FPModule.free(c4, 1)
    trace = partial_trace(c4, (1,), 4)
    sub, incl = submodule_on(R, [flatten_vector((trace,))])
    # R * T is isomorphic to Z
    assert sub.invariants == (1, ())
    img, _ = image_module(ModuleMap.multiplication(R, GroupRingElement.one(c4).scale(2)))
    assert img.is_free_presentation()


def test_compose_and_lift(c4):
    R = FPModule.free(c4, 1)
    two = ModuleMap.multiplication(R, GroupRingElement.one(c4).scale(2))
    four = compose(two, two)
    assert four.columns == ((GroupRingElement.one(c4).scale(4),),)
    assert lift_through(two, (2, 0, 4, 0)) == (1, 0, 2, 0)
    assert lift_through(two, (1, 0, 0, 0)) is None


def test_coinvariants_and_augmentation_submodule():
    c8, c4 = FiniteAbelianGroup((8,)), FiniteAbelianGroup((4,))
    delta = Subgroup.from_kernel(GroupHom(c8, c4, ((1,),)))
    R8 = FPModule.free(c8, 1)
    MD, proj = coinvariants(delta, R8)
    assert MD.group == c4
    assert MD.invariants == (4, ())
    assert is_surjective(proj)
    J = augmentation_submodule(delta, R8)
    assert len(J) == 4


def test_free_resolution_of_trivial_module(c2xc2):
    one = GroupRingElement.one(c2xc2)
    rels = [GroupRingElement.basis(c2xc2, c2xc2.generator(i)) - one for i in range(2)]
    Z = FPModule.cyclic(c2xc2, rels)
    res = free_resolution(Z, 2)
    assert res.ranks[:2] == (1, 2)
    for i in range(1, len(res.differentials)):
        d_hi, d_lo = res.differential(i + 1), res.differential(i)
        assert compose(d_lo, d_hi).is_zero()


def test_compressed_module_coordinates(c4):
    M = FPModule.cyclic(c4, [GroupRingElement.one(c4).scale(3), _varpi(c4)])
    cm = M.compressed
    assert cm.orders == (3,)
    v = cm.coords(flatten_vector((GroupRingElement.one(c4),)))
    assert cm.act((1,), v) == v
