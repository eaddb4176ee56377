#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/kappa.py

"""Base-change kernels of presentation kernels, and Tor against R/p^m."""

from __future__ import annotations

import logging

from prolim.src.algebra.fpmod import FPModule, ModuleMap, free_generators, free_resolution, translate
from prolim.src.algebra.homology import flat_homology_h1, tor_mod, torsion_part
from prolim.src.algebra.tower import ChainTower
from prolim.src.algebra.zlinalg import (
    AbelianInvariants,
    IntMatrix,
    kernel_basis,
    lattice_basis,
    quotient_invariants,
)
from prolim.src.errors import DimensionError, TowerError
from prolim.src.verify.report import CheckReport, check

logger = logging.getLogger(__name__)


def _divides(a: int | None, b: int | None) -> bool:
    return a is not None and b is not None and b % a == 0


def kernel_of_kappa(chain: ChainTower, a: int) -> tuple[AbelianInvariants, bool]:
    """
    (ker kappa_a, whether kappa_a is onto K_a), read off the flat lattices.

    With L = K_(a+1) inside R_(a+1)^t and P the push along rho_(a+1),
    ker kappa_a = (L cap ker P) / I_delta L, and kappa_a is onto when
    P(L) = K_a.
    """
    tower = chain.tower
    hi, lo = tower.group(a + 1), tower.group(a)
    upper, lower = chain.kernel_lattices[a + 1], chain.kernel_lattices[a]
    if not upper:
        return AbelianInvariants(), not lower
    dim = chain.t * hi.order
    push_down = ModuleMap(
        tower.ring(a + 1, chain.t), tower.ring(a, chain.t),
        tuple(free_generators(lo, chain.t)), hom=tower.rho(a + 1),
    ).flat_matrix
    B = IntMatrix.from_columns(list(upper), rows=dim)
    PB = push_down @ B
    onto = lattice_basis(PB.columns(), push_down.rows) == tuple(lower)
    cycles = [B.apply(c) for c in kernel_basis(PB).columns()]
    if not cycles:
        return AbelianInvariants(), onto
    boundaries = [
        tuple(x - y for x, y in zip(translate(hi, v, h), v))
        for v in upper
        for h in tower.delta(a + 1).generators
    ]
    return AbelianInvariants.from_pair(quotient_invariants(boundaries, cycles, dim)), onto


def check_kappa(chain: ChainTower, a: int) -> CheckReport:
    """
    kappa_a: coinvariants of K_(a+1) under Delta_(a+1) -> K_a, for the kernel
    tower of a presentation chain.

    Since R^t is free over Z[Delta], ker(kappa_a) is H_1(Delta_(a+1), M'_(a+1))
    with M' = R^t / K; its exponent divides |Delta_(a+1)|.
    """
    tower = chain.tower
    if not 0 <= a < tower.max_level:
        raise TowerError(f"check_kappa needs 0 <= a < {tower.max_level}, got {a}")
    delta = tower.delta(a + 1)
    kernel, onto = kernel_of_kappa(chain, a)
    h1 = flat_homology_h1(delta, chain.kernel_lattices[a + 1], chain.t * tower.group(a + 1).order)

    children = [
        check("exponent_divides_delta", _divides(kernel.exponent, delta.order),
              kernel=kernel, delta_order=delta.order),
        check("kernel_is_h1", kernel == h1, kernel=kernel, h1=h1),
    ]
    report = CheckReport.aggregate(
        "kappa", children,
        params={"tower": tower.spec.label(), "chain": chain.describe(), "level": a,
                "kernel": kernel, "h1": h1, "onto": onto},
    )
    logger.debug(f"kappa_{a} for chain {chain.kind}: kernel {kernel}, H_1 {h1}")
    return report


def check_tor_ppower(M: FPModule, p: int, m: int) -> CheckReport:
    """Tor_1(R/p^m, M) = M[p^m] and Tor_2(R/p^m, M) = 0 over R = Z[G]."""
    if m < 1:
        raise DimensionError(f"p-power exponent must be >= 1, got {m}")
    modulus = p ** m
    res = free_resolution(M, 3)
    tor1 = tor_mod(1, M, modulus, res)
    torsion = torsion_part(M, modulus)
    tor2 = tor_mod(2, M, modulus, res)
    children = [
        check("tor1_is_torsion", tor1 == torsion, tor1=tor1, torsion=torsion),
        check("tor2_vanishes", tor2.is_zero, tor2=tor2),
    ]
    return CheckReport.aggregate(
        "torpm", children,
        params={"group": str(M.group), "n_gens": M.n_gens, "relations": len(M.relations), "modulus": modulus},
    )
