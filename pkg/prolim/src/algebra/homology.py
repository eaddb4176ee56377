#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/algebra/homology.py

"""Tor over group rings, first group homology and p-power torsion."""

from __future__ import annotations

import logging
import math
from typing import Sequence

from prolim.src.algebra.fpmod import (
    FPModule,
    Resolution,
    base_change_map,
    free_resolution,
    preimage_lattice,
    translate,
)
from prolim.src.algebra.groupring import FiniteAbelianGroup, Subgroup
from prolim.src.algebra.zlinalg import (
    AbelianInvariants,
    IntMatrix,
    Vector,
    invariant_factors,
    lattice_basis,
    lattice_index,
    quotient_invariants,
)
from prolim.src.errors import DimensionError, RingMismatchError

logger = logging.getLogger(__name__)


def _node_homology(
    incoming: IntMatrix | None,
    outgoing: IntMatrix | None,
    dim: int,
    ambient_relations: list[tuple[int, ...]] | None = None,
    target_relations: list[tuple[int, ...]] | None = None,
) -> AbelianInvariants:
    """
    ker(outgoing) / im(incoming) on Z^dim, where both are taken modulo
    the given relation lattices (used for complexes of Z/n-modules).
    """
    ambient_relations = ambient_relations or []
    if outgoing is None:
        cycles = lattice_basis([tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)], dim)
    else:
        cycles = preimage_lattice(outgoing, target_relations or [])
    boundaries = list(ambient_relations)
    if incoming is not None:
        boundaries.extend(incoming.columns())
    return AbelianInvariants.from_pair(
        quotient_invariants(lattice_basis(boundaries, dim), cycles, dim)
    )


def tor_basechange(i: int, delta: Subgroup, M: FPModule) -> AbelianInvariants:
    """
    Tor_i over Z[G] of (Z[G/delta], M): resolve M, push the complex to
    Z[G/delta] and take homology at F_i.
    """
    if i < 0:
        raise DimensionError(f"Tor degree must be >= 0, got {i}")
    if delta.ambient != M.group:
        raise RingMismatchError("Subgroup of a different group")
    res = free_resolution(M, i + 1)
    q = delta.quotient
    d_in = base_change_map(q, res.differential(i + 1)).flat_matrix
    d_out = base_change_map(q, res.differential(i)).flat_matrix if i >= 1 else None
    dim = res.free_module(i).n_gens * q.target.order
    out = _node_homology(d_in, d_out, dim)
    logger.debug(f"Tor_{i}(Z[{q.target}], M) = {out}")
    return out


def tor_mod(
    i: int, M: FPModule, modulus: int, res: Resolution | None = None
) -> AbelianInvariants:
    """
    Tor_i over Z[G] of (Z[G]/modulus, M), from a free resolution of M.

    A resolution of M computed to at least F_(i+1) may be passed in to
    share it across degrees.
    """
    if i < 0:
        raise DimensionError(f"Tor degree must be >= 0, got {i}")
    if modulus < 1:
        raise DimensionError(f"Modulus must be positive, got {modulus}")
    if res is None:
        res = free_resolution(M, i + 1)
    elif res.module is not M:
        raise RingMismatchError("Resolution of a different module")
    n = M.group.order

    def scaled_identity(rank: int) -> list[tuple[int, ...]]:
        size = rank * n
        return [tuple(modulus if r == c else 0 for r in range(size)) for c in range(size)]

    dim = res.free_module(i).n_gens * n
    d_in = res.differential(i + 1).flat_matrix
    d_out = res.differential(i).flat_matrix if i >= 1 else None
    below = scaled_identity(res.free_module(i - 1).n_gens) if i >= 1 else None
    out = _node_homology(d_in, d_out, dim, scaled_identity(res.free_module(i).n_gens), below)
    logger.debug(f"Tor_{i}(R/{modulus}, M) = {out}")
    return out


def torsion_part(M: FPModule, n: int) -> AbelianInvariants:
    """Invariants of M[n] = {x in M : n x = 0}."""
    if n < 1:
        raise DimensionError(f"Torsion exponent must be positive, got {n}")
    _, torsion = M.invariants
    return AbelianInvariants(0, invariant_factors(math.gcd(t, n) for t in torsion))


def _shift(group: FiniteAbelianGroup, v: Sequence[int], h: Sequence[int], times: int = 1) -> Vector:
    return translate(group, v, group.scale(times, h))


def flat_homology_h1(
    delta: Subgroup, relation_lattice: Sequence[Sequence[int]], dim: int
) -> AbelianInvariants:
    """
    H_1(delta, Z^dim / S) for a G-stable lattice S in flat coordinates.

    delta = <h_1> x ... x <h_r> is resolved by the tensor product of the
    periodic resolutions of its cyclic factors, in degrees <= 2:
    d_1 sends block i to (h_i - 1); d_2 sends the square of factor i to
    N_i in block i and the pair (i, j) to (h_i - 1) in block j and
    -(h_j - 1) in block i.
    """
    group = delta.ambient
    factors = delta.cyclic_decomposition
    r = len(factors)
    # free modules are acyclic over Z[delta]; the zero module has no homology
    if not r or not relation_lattice or lattice_index(relation_lattice, dim) == 1:
        return AbelianInvariants()
    units = [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]

    def minus_one(h, v):
        return tuple(a - b for a, b in zip(_shift(group, v, h), v))

    def norm(h, n, v):
        total = [0] * dim
        for k in range(n):
            for i, x in enumerate(_shift(group, v, h, k)):
                total[i] += x
        return tuple(total)

    def placed(blocks: dict[int, Vector]) -> Vector:
        out = [0] * (r * dim)
        for b, v in blocks.items():
            out[b * dim:(b + 1) * dim] = v
        return tuple(out)

    d1 = [minus_one(h, e) for h, _ in factors for e in units]
    d2 = [placed({i: norm(h, n, e)}) for i, (h, n) in enumerate(factors) for e in units]
    for i in range(r):
        for j in range(i + 1, r):
            hi, hj = factors[i][0], factors[j][0]
            d2.extend(
                placed({j: minus_one(hi, e), i: tuple(-x for x in minus_one(hj, e))}) for e in units
            )
    blocks = [placed({b: tuple(v)}) for b in range(r) for v in relation_lattice]
    out = _node_homology(
        IntMatrix.from_columns(d2, rows=r * dim),
        IntMatrix.from_columns(d1, rows=dim),
        r * dim,
        blocks,
        list(relation_lattice),
    )
    logger.debug(f"H_1(delta of order {delta.order}) = {out}")
    return out


def homology_h1(delta: Subgroup, M: FPModule) -> AbelianInvariants:
    """H_1(delta, M) from a small free resolution of Z over Z[delta]."""
    if delta.ambient != M.group:
        raise RingMismatchError("Subgroup of a different group")
    return flat_homology_h1(delta, M.relation_lattice, M.dim)
