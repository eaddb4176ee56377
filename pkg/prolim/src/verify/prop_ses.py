#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/prop_ses.py

"""
Per-level checks of the short exact sequences built from varpi, T and e.

At level m the ring is R_m = Z[Gamma_m]; every check has an independent
lattice computation behind it.
"""

from __future__ import annotations

import logging

from prolim.src.algebra.fpmod import (
    FPModule,
    ModuleMap,
    flatten_vector,
    free_generators,
    is_exact_at,
    is_injective,
    is_surjective,
    submodule_lattice,
)
from prolim.src.algebra.groupring import augmentation, gr_mul, push
from prolim.src.algebra.tower import Tower, e_module, ideal_I_varpi, q_module, q_module_by_p_power
from prolim.src.errors import IllDefinedMapError
from prolim.src.verify.report import CheckReport, check

logger = logging.getLogger(__name__)


def _exactness(name: str, tower: Tower, m: int, first, second) -> CheckReport:
    """im(mult by first) == ker(mult by second) on R_m."""
    R = tower.ring(m)
    try:
        exact = is_exact_at(ModuleMap.multiplication(R, first), ModuleMap.multiplication(R, second))
    except IllDefinedMapError as e:
        return check(name, False, reason=str(e))
    return check(name, exact, first=str(first), second=str(second))


def _transition(source: FPModule, target: FPModule, tower: Tower, m: int) -> ModuleMap:
    return ModuleMap(
        source, target, tuple(free_generators(target.group, target.n_gens)), hom=tower.rho(m)
    )


def verify_prop_ses(tower: Tower, m: int) -> CheckReport:
    """
    Checks at level m:

    (a) ann(varpi_m) = R_m T_m
    (b) rho_m(T_m) = p^(n_m - n_(m-1)) T_(m-1)
    (c) rho_m(e_m) = e_(m-1) and e_m^2 = e_m
    (d) R_m e_m / R_m T_m = R_m e_m / p^n_m, of the expected order
    (e) augmentation(varpi_m) = 0
    (f) R_m varpi_m embeds in R_m, and the transitions of the varpi-ideal
        and R e towers are onto
    (g) ann(e_m) = R_m varpi_m
    (h) ann(T_m) = R_m varpi_m
    """
    tower._check_level(m)
    params = {"tower": tower.spec.label(), "level": m}
    if m == 0:
        return CheckReport.aggregate(
            "prop_ses", [check("degenerate", True)], params=params
        )
    p = tower.p
    group = tower.group(m)
    varpi, trace = tower.varpi(m), tower.trace(m)
    children = [_exactness("ann_varpi", tower, m, trace, varpi)]

    pushed_trace = push(tower.rho(m), trace)
    expected_trace = tower.trace(m - 1).scale(p ** (tower.n(m) - tower.n(m - 1)))
    children.append(check(
        "trace_projection", pushed_trace == expected_trace,
        got=str(pushed_trace), expected=str(expected_trace),
    ))

    e = tower.idempotent(m)
    pushed_e = push(tower.rho(m), e)
    children.append(check(
        "idempotent",
        pushed_e == tower.idempotent(m - 1) and gr_mul(e, e) == e,
        projection=str(pushed_e),
    ))

    Q = q_module(tower, m)
    Q_p = q_module_by_p_power(tower, m)
    expected_order = p ** (tower.n(m) * group.order // p ** tower.n(m))
    order = Q.order()
    children.append(check(
        "q_module",
        Q.same_presentation(Q_p) and order == expected_order,
        order=order, expected_order=expected_order,
    ))

    eps = augmentation(varpi)
    children.append(check("augmentation", eps == 0, augmentation=eps))

    varpi_hi, embedding = ideal_I_varpi(tower, m)
    varpi_lo, _ = ideal_I_varpi(tower, m - 1)
    children.append(check("varpi_ideal_embeds", is_injective(embedding)))
    e_hi, e_lo = e_module(tower, m), e_module(tower, m - 1)
    onto_varpi = is_surjective(_transition(varpi_hi, varpi_lo, tower, m))
    onto_e = is_surjective(_transition(e_hi, e_lo, tower, m))
    children.append(check(
        "transitions_onto", onto_varpi and onto_e, varpi_ideal=onto_varpi, e_module=onto_e
    ))

    varpi_lattice = submodule_lattice(group, [flatten_vector((varpi,))], group.order)
    children.append(check(
        "ann_idempotent", e_hi.relation_lattice == varpi_lattice,
        rank_ann=len(e_hi.relation_lattice), rank_varpi=len(varpi_lattice),
    ))
    children.append(_exactness("ann_trace", tower, m, varpi, trace))

    report = CheckReport.aggregate("prop_ses", children, params=params)
    logger.debug(f"prop_ses {params}: {'pass' if report.passed else 'fail'}")
    return report
