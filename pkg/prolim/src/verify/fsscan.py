#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/fsscan.py

"""Local generator counts of presentation kernels across tower levels."""

from __future__ import annotations

import logging
from typing import Iterable

from prolim.src.algebra.fpmod import flatten_vector, submodule_lattice
from prolim.src.algebra.groupring import push
from prolim.src.algebra.local import ForsterSwanBound, fs_bound
from prolim.src.algebra.tower import ChainTower, Tower
from prolim.src.errors import IllDefinedMapError
from prolim.src.verify.report import CheckReport, check

logger = logging.getLogger(__name__)


def _kernel_lattices(chain: ChainTower, m: int) -> tuple[tuple, tuple]:
    """(level kernel, stable kernel) as lattices in the flat coordinates of R_m^t."""
    tower = chain.tower
    group = tower.group(m)
    dim = chain.t * group.order
    level = chain.kernel_lattices[m]
    _, top_incl = chain.kernel(tower.max_level)
    hom = tower.rho_down(tower.max_level, m)
    stable = submodule_lattice(
        group, (flatten_vector(tuple(push(hom, a) for a in c)) for c in top_incl.columns), dim
    )
    return level, stable


def _prime_to_p_excess(bound: ForsterSwanBound, p: int, t: int) -> dict[int, int]:
    return {ell: mu for ell, mu in bound.per_prime.items() if ell != p and mu > t}


def fs_scan(tower: Tower, chain: ChainTower, levels: Iterable[int] | None = None) -> CheckReport:
    """
    Forster-Swan bounds of the level kernels K_m = ker(theta_m) and of the
    stable kernels (images of K_M), level by level.

    Reports c (largest level bound), the stable counterpart, and
    c' = max(t, mu_p of the stable kernel at level 0). Every count at a prime
    other than p must be at most t.
    """
    if chain.tower is not tower:
        raise IllDefinedMapError("Chain belongs to a different tower")
    p, t = tower.p, chain.t
    levels = list(levels) if levels is not None else list(range(1, tower.max_level + 1))
    for m in levels:
        tower._check_level(m)

    children = []
    level_bounds, stable_bounds, diverging = [], [], []
    for m in levels:
        K, _ = chain.kernel(m)
        stable = chain.stable_kernel(m)
        fb, fb_stable = fs_bound(K, p), fs_bound(stable, p)
        level_bounds.append(fb.bound)
        stable_bounds.append(fb_stable.bound)
        level_lattice, stable_lattice = _kernel_lattices(chain, m)
        if level_lattice != stable_lattice:
            diverging.append(m)
        excess = _prime_to_p_excess(fb, p, t)
        excess_stable = _prime_to_p_excess(fb_stable, p, t)
        leaf = check(
            f"level{m}", not excess and not excess_stable,
            level=excess, stable=excess_stable,
        )
        leaf.params = {"level": m, "kernel": fb, "stable_kernel": fb_stable}
        children.append(leaf)

    mu_p_stable_0 = fs_bound(chain.stable_kernel(0), p).per_prime[p]
    c = max(level_bounds, default=0)
    c_stable = max(stable_bounds, default=0)
    c_prime = max(t, mu_p_stable_0)
    report = CheckReport.aggregate(
        "fsscan", children,
        params={
            "tower": tower.spec.label(), "chain": chain.describe(), "levels": levels,
            "c": c, "c_stable": c_stable, "c_prime": c_prime, "diverging_levels": diverging,
        },
    )
    logger.debug(f"fs_scan {chain.kind} over {tower.spec.label()}: c={c}, c'={c_prime}")
    return report
