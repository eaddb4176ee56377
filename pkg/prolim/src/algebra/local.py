#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/algebra/local.py

"""
Local generator counts of modules over Z[G], G a p-group.

At l = p the group algebra F_p[G] is local and the count is the residue
dimension of M / (p M + J_G M). At l != p, F_l[G] is a product of finite
fields, one per pair (character kernel H with G/H cyclic of order c,
irreducible factor f of the c-th cyclotomic polynomial mod l); the count
is the largest residue dimension over those fields.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from sympy import cyclotomic_poly, isprime, nextprime, primefactors
from sympy.abc import x
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import (
    gf_factor_sqf,
    gf_from_int_poly,
    gf_gcdex,
    gf_mul,
    gf_quo,
    gf_rem,
)

from prolim.src.algebra.fpmod import FPModule, base_change_module
from prolim.src.algebra.groupring import (
    BaseRing,
    FiniteAbelianGroup,
    GroupHom,
    GroupRingElement,
    character_quotients,
    gr_mul,
)
from prolim.src.algebra.zlinalg import IntMatrix, rank_mod
from prolim.src.errors import RingMismatchError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalComponent:
    """One maximal ideal of F_l[G] and the residue dimension of M there."""
    prime: int
    character: tuple[int, ...]
    cyclic_order: int
    factor: tuple[int, ...]
    residue_degree: int
    dimension: int
    idempotent: GroupRingElement

    def as_dict(self) -> dict:
        return {
            "prime": self.prime,
            "character": list(self.character),
            "cyclic_order": self.cyclic_order,
            "factor": list(self.factor),
            "residue_degree": self.residue_degree,
            "dimension": self.dimension,
        }


def _check_prime(group: FiniteAbelianGroup, ell: int) -> bool:
    """True when ell divides |G| (the local case); rejects non-prime ell and mixed orders."""
    if not isprime(ell):
        raise RingMismatchError(f"{ell} is not prime")
    order = group.order
    if order % ell:
        return False
    while order % ell == 0:
        order //= ell
    if order != 1:
        raise RingMismatchError(f"Group {group} is not an {ell}-group")
    return True


def _residue_dim_at_p(M: FPModule, ell: int) -> int:
    """dim over F_ell of M / (ell M + J_G M)."""
    if M.n_gens == 0:
        return 0
    rows = [[sum(col[i].coeffs) for col in M.relations] for i in range(M.n_gens)]
    A = IntMatrix.from_rows(rows, cols=len(M.relations))
    return M.n_gens - rank_mod(A, ell)


def _poly_at_shift(coeffs_low_first: list[int], c: int, n_blocks: int) -> list[tuple[int, ...]]:
    """Columns of f(A) where A shifts each length-c block cyclically by one."""
    size = n_blocks * c
    columns = []
    for b in range(n_blocks):
        for t in range(c):
            col = [0] * size
            for k, f_k in enumerate(coeffs_low_first):
                if f_k:
                    col[b * c + (t + k) % c] += f_k
            columns.append(tuple(col))
    return columns


def _component_idempotent(
    group: FiniteAbelianGroup, hom: GroupHom, g_poly: list[int], f_poly: list[int], ell: int
) -> GroupRingElement:
    """E_f(gamma0) * e_H in F_ell[G], where gamma0 maps to the generator of G/H."""
    base = BaseRing.int_mod(ell)
    c = hom.target.order
    s, _, _ = gf_gcdex(g_poly, f_poly, ell, ZZ)
    modulus = [1] + [0] * (c - 1) + [ell - 1]
    e_poly = gf_rem(gf_mul(s, g_poly, ell, ZZ), modulus, ell, ZZ)
    gamma0 = next(g for g in group.elements if hom.apply(g) == (1 % c,))
    low_first = list(reversed(e_poly))
    e_f = GroupRingElement.from_terms(
        group, ((int(a), group.scale(k, gamma0)) for k, a in enumerate(low_first) if a), base
    )
    kernel = hom.kernel_elements()
    e_h = GroupRingElement.from_terms(group, ((1, g) for g in kernel), base).scale(
        pow(len(kernel), -1, ell)
    )
    return gr_mul(e_f, e_h)


def local_components(M: FPModule, ell: int) -> list[LocalComponent]:
    """
    Residue dimensions of M at every maximal ideal of F_ell[G].

    Raises:
        RingMismatchError: if ell is not prime or G is not a p-group
    """
    group = M.group
    if _check_prime(group, ell):
        one = GroupRingElement.one(group, BaseRing.int_mod(ell))
        return [LocalComponent(ell, group.identity, 1, (1, ell - 1), 1, _residue_dim_at_p(M, ell), one)]
    out = []
    for chi, hom in character_quotients(group):
        c = hom.target.order
        MH = base_change_module(hom, M)
        relations = list(MH.relation_lattice)
        modulus_poly = gf_from_int_poly([1] + [0] * (c - 1) + [-1], ell)
        cyclo = gf_from_int_poly([int(a) for a in cyclotomic_poly(c, x, polys=True).all_coeffs()], ell)
        _, factors = gf_factor_sqf(cyclo, ell, ZZ)
        for f in factors:
            deg = len(f) - 1
            if MH.n_gens:
                cols = relations + _poly_at_shift(list(reversed(f)), c, MH.n_gens)
                rank = rank_mod(IntMatrix.from_columns(cols, rows=MH.dim), ell)
                dim = (MH.dim - rank) // deg
            else:
                dim = 0
            g_poly = gf_quo(modulus_poly, f, ell, ZZ)
            idem = _component_idempotent(group, hom, g_poly, f, ell)
            out.append(LocalComponent(ell, chi, c, tuple(int(a) for a in f), deg, dim, idem))
    logger.debug(f"{len(out)} components of F_{ell}[{group}]")
    return out


def min_gens(M: FPModule, ell: int) -> int:
    """Minimal number of generators of M over Z_ell[G] (0 for the zero module)."""
    group = M.group
    if _check_prime(group, ell):
        return _residue_dim_at_p(M, ell)
    return max((comp.dimension for comp in local_components(M, ell)), default=0)


def _generic_prime(excluded: set[int]) -> int:
    ell = 2
    while ell in excluded:
        ell = nextprime(ell)
    return ell


@dataclass(frozen=True)
class ForsterSwanBound:
    """Local generator counts and the resulting global bound max + 1."""
    per_prime: dict[int, int]
    bound: int

    def as_dict(self) -> dict:
        return {"per_prime": {str(k): v for k, v in sorted(self.per_prime.items())}, "bound": self.bound}


def fs_bound(M: FPModule, p: int) -> ForsterSwanBound:
    """
    Forster-Swan bound over the one-dimensional base Z.

    Primes checked: p, every prime dividing a torsion invariant of M, and one
    generic prime outside that set when M has positive free rank.
    """
    free, torsion = M.invariants
    primes = {p}
    for t in torsion:
        primes.update(int(q) for q in primefactors(t))
    if free:
        primes.add(_generic_prime(primes))
    per_prime = {ell: min_gens(M, ell) for ell in sorted(primes)}
    top = max(per_prime.values())
    bound = top + 1 if top else 0
    return ForsterSwanBound(per_prime, bound)
