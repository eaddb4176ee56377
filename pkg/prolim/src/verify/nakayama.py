#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/verify/nakayama.py

"""
Level-by-level generator lifting for tower modules.

Starting from Z-generators X_0 of M_(0), the generators of level n-1 are
lifted through the transition M_(n) -> M_(n-1). The lifted submodule M_n
must have finite index prime to p (first property) and base change must
carry M_n onto M_(n-1) isomorphically (second property). The finite
quotient Q_n = M_(n) / M_n splits as e_n Q_n + (1 - e_n) Q_n with
e_n = |Delta_n|^-1 N_Delta_n; e_n Q_n is Q_(n-1) again, so only the
(1 - e_n)-part needs new generators, at most d of them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from sympy import factorint

from prolim.src.algebra.fpmod import (
    FPModule,
    ModuleMap,
    augmentation_submodule,
    coinvariants,
    flatten_vector,
    free_generators,
    is_injective,
    ker_map,
    lift_through,
    preimage_lattice,
    submodule_lattice,
    submodule_on,
    translate,
    unflatten_vector,
)
from prolim.src.algebra.groupring import FiniteAbelianGroup, GroupRingElement, norm_element
from prolim.src.algebra.local import local_components, min_gens
from prolim.src.algebra.tower import TowerModule
from prolim.src.algebra.zlinalg import AbelianInvariants, Vector, in_lattice
from prolim.src.errors import DimensionError
from prolim.src.verify.report import CheckReport, check

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LiftedGenerator:
    """Flat coordinates of one generator at every level; kind is "x" or "z"."""
    kind: str
    levels: tuple[Vector, ...]

    def as_dict(self) -> dict:
        return {"kind": self.kind, "levels": [list(v) for v in self.levels]}


def _act(group: FiniteAbelianGroup, a: GroupRingElement, flat: Sequence[int]) -> Vector:
    """The flat vector of a * v."""
    out = [0] * len(flat)
    for g, c in zip(group.elements, a.coeffs):
        if c:
            for i, x in enumerate(translate(group, flat, g)):
                out[i] += c * x
    return tuple(out)


def _columns(group: FiniteAbelianGroup, vectors: Sequence[Vector]) -> list:
    return [unflatten_vector(group, v) for v in vectors]


def _local_generators(B: FPModule, ell: int) -> list[Vector]:
    """
    Generators of B tensor Z_ell, ell prime to |G|: in each component of
    F_ell[G] pick a residue basis among E * generator_j, then add the k-th
    picks of all components together.
    """
    group = B.group
    base = list(B.relation_lattice) + [
        tuple(ell if i == j else 0 for i in range(B.dim)) for j in range(B.dim)
    ]
    floor = submodule_lattice(group, base, B.dim)
    picks: list[list[Vector]] = []
    for comp in local_components(B, ell):
        idem = GroupRingElement(group, tuple(int(c) for c in comp.idempotent.coeffs))
        span, chosen = floor, []
        for e in free_generators(group, B.n_gens):
            if len(chosen) == comp.dimension:
                break
            v = flatten_vector(tuple(idem * a for a in e))
            if in_lattice(span, v):
                continue
            chosen.append(v)
            span = submodule_lattice(group, list(span) + [v], B.dim)
        picks.append(chosen)
    count = max((len(c) for c in picks), default=0)
    out = []
    for k in range(count):
        w = [0] * B.dim
        for chosen in picks:
            if k < len(chosen):
                w = [a + b for a, b in zip(w, chosen[k])]
        out.append(tuple(w))
    return out


def complement_generators(B: FPModule) -> list[Vector]:
    """
    Generators of a finite module B of order prime to |G|, as many as its
    largest local count, glued across primes with CRT multipliers.
    """
    exponent = AbelianInvariants.from_pair(B.invariants).exponent
    if exponent is None:
        raise DimensionError("complement_generators needs a finite module")
    per_prime = []
    for ell, power in sorted(factorint(exponent).items()):
        part = ell ** power
        rest = exponent // part
        multiplier = rest * pow(rest, -1, part) % exponent
        per_prime.append((multiplier, _local_generators(B, ell)))
    count = max((len(ws) for _, ws in per_prime), default=0)
    out = []
    for k in range(count):
        w = [0] * B.dim
        for c, ws in per_prime:
            if k < len(ws):
                w = [a + c * b for a, b in zip(w, ws[k])]
        out.append(tuple(w))
    return out


def _abort(name: str, children: list[CheckReport], params: dict, **witness) -> CheckReport:
    return CheckReport(name, False, params=params, witness=witness, children=children)


def nakayama_lift(tm: TowerModule, d: int | None = None) -> tuple[list[LiftedGenerator], CheckReport]:
    """
    Lift generators up the tower module and verify the generator bound
    mu_Z(M_(0)) + d.

    Args:
        tm: tower module with surjective transitions
        d: bound on the (1 - e_n)-parts; defaults to the largest number of
            generators of any level presentation

    Returns:
        tuple[list[LiftedGenerator], CheckReport]: the generators (empty when
        a property fails) and the report
    """
    tower = tm.tower
    p = tower.p
    if d is None:
        d = max(M.n_gens for M in tm.levels)
    M0 = tm.levels[0]
    cm0 = M0.compressed
    xs: list[list[Vector]] = [[tuple(cm0.from_coords.column(i)) for i in range(len(cm0.orders))]]
    zs: list[list[Vector]] = [[]]
    kappa = len(xs[0])
    params = {"tower": tower.spec.label(), "module": tm.name, "d": d, "kappa": kappa}
    logger.info(f"Nakayama lift of {tm.name or 'module'} over {tower.spec.label()}: kappa={kappa}, d={d}")

    onto = tm.surjective_transitions()
    children = [check("transitions_onto", all(onto), levels=[m + 1 for m, ok in enumerate(onto) if not ok])]
    if not all(onto):
        return [], _abort("nakayama", children, params, stage="transitions")

    for n in range(1, tower.max_level + 1):
        Mn, prev = tm.levels[n], tm.levels[n - 1]
        group = Mn.group
        theta = tm.transitions[n - 1]
        delta = tower.delta(n)
        level: list[CheckReport] = []

        iso, kernel = tm.base_change_defect(n - 1)
        level.append(check("base_change", iso, kernel=kernel))
        if not iso:
            children.append(CheckReport.aggregate(f"level{n}", level, params={"level": n}))
            logger.info(f"Base change fails at level {n}: kernel {kernel}")
            return [], _abort("nakayama", children, params, level=n, stage="base_change", kernel=kernel)

        lifts = [lift_through(theta, x) for x in xs[n - 1]]
        if any(y is None for y in lifts):
            level.append(check("lift", False))
            children.append(CheckReport.aggregate(f"level{n}", level, params={"level": n}))
            return [], _abort("nakayama", children, params, level=n, stage="lift")
        xs.append([tuple(y) for y in lifts])

        Q = Mn.with_relations(_columns(group, xs[n]))
        q_inv = AbelianInvariants.from_pair(Q.invariants)
        order = q_inv.order
        finite_prime_to_p = order is not None and order % p != 0
        level.append(check("index", finite_prime_to_p, quotient=q_inv))
        if not finite_prime_to_p:
            children.append(CheckReport.aggregate(f"level{n}", level, params={"level": n}))
            return [], _abort("nakayama", children, params, level=n, stage="index", quotient=q_inv)

        if xs[n]:
            sub, _ = submodule_on(Mn, xs[n])
            sub_d, _ = coinvariants(delta, sub)
            down = ModuleMap(sub_d, prev, tuple(_columns(prev.group, xs[n - 1])))
            injective = is_injective(down)
            witness = {} if injective else {"kernel": AbelianInvariants.from_pair(ker_map(down)[0].invariants)}
        else:
            injective, witness = True, {}
        level.append(check("submodule_base_change", injective, **witness))
        if not injective:
            children.append(CheckReport.aggregate(f"level{n}", level, params={"level": n}))
            return [], _abort("nakayama", children, params, level=n, stage="submodule_base_change", **witness)

        transition_kernel = preimage_lattice(theta.flat_matrix, prev.relation_lattice)
        level.append(check(
            "kernel_is_augmentation", transition_kernel == augmentation_submodule(delta, Mn)
        ))

        # Q_n = e Q_n + (1 - e) Q_n; e acts as s * N with s = |Delta|^-1 mod exp(Q_n)
        exponent = q_inv.exponent
        s = pow(delta.order, -1, exponent) if exponent > 1 else 0
        norm = norm_element(delta)
        complement = Q.with_relations(
            [tuple(norm if i == j else GroupRingElement.zero(group) for i in range(Mn.n_gens))
             for j in range(Mn.n_gens)]
        )
        if exponent > 1:
            ws = complement_generators(complement)
            mu = max((min_gens(complement, ell) for ell in factorint(exponent)), default=0)
        else:
            ws, mu = [], 0
        level.append(check("complement_rank", mu <= d and len(ws) == mu, mu=mu, d=d, found=len(ws)))
        level.append(check("complement_generators", complement.generates(_columns(group, ws))))

        one = GroupRingElement.one(group)
        e_part = norm.scale(s)
        new_z = []
        for k in range(max(len(zs[n - 1]), len(ws))):
            z = [0] * Mn.dim
            if k < len(zs[n - 1]):
                lifted = lift_through(theta, zs[n - 1][k])
                z = list(_act(group, e_part, lifted))
            if k < len(ws):
                b = _act(group, one - e_part, ws[k])
                z = [a + c for a, c in zip(z, b)]
            new_z.append(tuple(z))
        zs.append(new_z)

        Q_prev = prev.with_relations(_columns(prev.group, xs[n - 1]))
        mismatched = [
            k for k, z in enumerate(new_z)
            if not Q_prev.contains_zero(tuple(
                a - b for a, b in zip(theta.apply_flat(z), zs[n - 1][k] if k < len(zs[n - 1]) else (0,) * prev.dim)
            ))
        ]
        level.append(check("quotient_generators", Q.generates(_columns(group, new_z)), order=order))
        level.append(check("quotient_compatible", not mismatched, generators=mismatched))
        children.append(CheckReport.aggregate(f"level{n}", level, params={"level": n, "quotient_order": order}))

    generators = [
        LiftedGenerator("x", tuple(xs[n][i] for n in tower.levels())) for i in range(kappa)
    ]
    z_count = len(zs[-1])
    for k in range(z_count):
        generators.append(LiftedGenerator("z", tuple(
            zs[n][k] if k < len(zs[n]) else (0,) * tm.levels[n].dim for n in tower.levels()
        )))

    not_generating = [
        n for n in tower.levels()
        if not tm.levels[n].generates(_columns(tm.levels[n].group, [g.levels[n] for g in generators]))
    ]
    children.append(check("generates", not not_generating, levels=not_generating))
    children.append(check("count", len(generators) <= kappa + d, count=len(generators), bound=kappa + d))
    params["generators"] = len(generators)
    report = CheckReport.aggregate("nakayama", children, params=params)
    logger.info(f"Nakayama lift produced {len(generators)} generators (bound {kappa + d})")
    return generators, report
