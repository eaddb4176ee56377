#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/algebra/fpmod.py

"""
Finitely presented modules over Z[G] for a finite abelian group G.

A module with n generators is stored as n plus a list of relation columns in
Z[G]^n. Every computation goes through the flat picture: the underlying
abelian group is Z^(n*|G|) / S where coordinate i*|G| + index(g) holds the
coefficient of g in component i, and S is the Z-span of all g-translates of
the relation columns. Submodules of Z[G]^n are exactly the G-stable lattices.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from prolim.src.algebra.groupring import (
    BaseKind,
    FiniteAbelianGroup,
    GroupHom,
    GroupRingElement,
    Subgroup,
    push,
    rel_aug_ideal,
)
from prolim.src.algebra.zlinalg import (
    IntMatrix,
    Vector,
    cokernel_invariants,
    in_lattice,
    inverse_unimodular,
    kernel_basis,
    lattice_basis,
    lattice_index,
    snf,
    solve,
)
from prolim.src.errors import DimensionError, IllDefinedMapError, RingMismatchError

logger = logging.getLogger(__name__)

Column = tuple[GroupRingElement, ...]


# ---------------------------------------------------------------------------
# flat coordinates

def flatten_vector(vec: Sequence[GroupRingElement]) -> Vector:
    out: list[int] = []
    for a in vec:
        if a.base.kind is not BaseKind.INT:
            raise RingMismatchError(f"Flattening needs integral coefficients, got {a.base}")
        out.extend(a.coeffs)
    return tuple(out)


def unflatten_vector(group: FiniteAbelianGroup, flat: Sequence[int]) -> Column:
    n = group.order
    if n == 0 or len(flat) % n:
        raise DimensionError(f"Flat vector of length {len(flat)} for group order {n}")
    return tuple(
        GroupRingElement(group, tuple(flat[i * n:(i + 1) * n])) for i in range(len(flat) // n)
    )


def translate(group: FiniteAbelianGroup, flat: Sequence[int], g: Sequence[int]) -> Vector:
    """The flat vector of g * v."""
    n = group.order
    row = group.add_table[group.index(g)]
    out = [0] * len(flat)
    for block in range(0, len(flat), n):
        for k in range(n):
            c = flat[block + k]
            if c:
                out[block + row[k]] = c
    return tuple(out)


def orbit(group: FiniteAbelianGroup, flat: Sequence[int]) -> list[Vector]:
    return [translate(group, flat, g) for g in group.elements]


def submodule_lattice(
    group: FiniteAbelianGroup, vectors: Iterable[Sequence[int]], dim: int
) -> tuple[Vector, ...]:
    """Hermite basis of the Z[G]-submodule spanned by flat vectors."""
    spanning: list[Vector] = []
    for v in vectors:
        if any(v):
            spanning.extend(orbit(group, v))
    return lattice_basis(spanning, dim)


def preimage_lattice(
    F: IntMatrix, target_lattice: Sequence[Sequence[int]]
) -> tuple[Vector, ...]:
    """Hermite basis of {x : F x in target_lattice}."""
    ns = F.cols
    if not target_lattice:
        return lattice_basis(kernel_basis(F).columns(), ns)
    T = IntMatrix.from_columns(list(target_lattice), rows=F.rows)
    K = kernel_basis(F.hstack(T))
    return lattice_basis((col[:ns] for col in K.columns()), ns)


def extract_generators(
    group: FiniteAbelianGroup,
    lattice: Sequence[Sequence[int]],
    base: Sequence[Sequence[int]],
    dim: int,
) -> list[Vector]:
    """
    Deterministic Z[G]-generators of a G-stable lattice modulo a G-stable sublattice.

    Walks the Hermite basis of `lattice` and keeps each vector not yet in the
    submodule spanned by `base` and the vectors kept so far.
    """
    span = lattice_basis(base, dim)
    target = lattice_basis(lattice, dim)
    chosen: list[Vector] = []
    for v in target:
        if span == target:
            break
        if in_lattice(span, v):
            continue
        chosen.append(tuple(v))
        span = lattice_basis(list(span) + orbit(group, v), dim)
    return chosen


# ---------------------------------------------------------------------------
# modules

@dataclass(frozen=True)
class FPModule:
    """
    Z[group]^n_gens modulo the submodule spanned by `relations`.

    Each relation is a column of n_gens integral group-ring elements.
    """
    group: FiniteAbelianGroup
    n_gens: int
    relations: tuple[Column, ...] = ()

    def __post_init__(self):
        if self.n_gens < 0:
            raise DimensionError(f"Negative generator count {self.n_gens}")
        rels = tuple(tuple(col) for col in self.relations)
        for col in rels:
            if len(col) != self.n_gens:
                raise DimensionError(
                    f"Relation with {len(col)} entries for {self.n_gens} generators"
                )
            for a in col:
                if a.group != self.group:
                    raise RingMismatchError(f"Relation over {a.group}, module over {self.group}")
                if a.base.kind is not BaseKind.INT:
                    raise RingMismatchError("Module relations must be integral")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def free(cls, group: FiniteAbelianGroup, rank: int) -> "FPModule":
        return cls(group, rank, ())

    @classmethod
    def zero(cls, group: FiniteAbelianGroup) -> "FPModule":
        return cls(group, 0, ())

    @classmethod
    def cyclic(cls, group: FiniteAbelianGroup, relations: Iterable[GroupRingElement]) -> "FPModule":
        """Z[G] / (ideal generated by `relations`)."""
        return cls(group, 1, tuple((r,) for r in relations))

    @classmethod
    def from_flat(
        cls, group: FiniteAbelianGroup, n_gens: int, flat_relations: Iterable[Sequence[int]]
    ) -> "FPModule":
        return cls(group, n_gens, tuple(unflatten_vector(group, v) for v in flat_relations))

    @property
    def dim(self) -> int:
        """Rank of the flat ambient lattice Z^(n_gens*|G|)."""
        return self.n_gens * self.group.order

    def with_relations(self, extra: Iterable[Sequence[GroupRingElement]]) -> "FPModule":
        return FPModule(self.group, self.n_gens, self.relations + tuple(tuple(c) for c in extra))

    @cached_property
    def relation_lattice(self) -> tuple[Vector, ...]:
        return submodule_lattice(
            self.group, (flatten_vector(col) for col in self.relations), self.dim
        )

    @cached_property
    def action_matrices(self) -> tuple[IntMatrix, ...]:
        """Permutation matrices of the standard group generators on the flat lattice."""
        mats = []
        n = self.group.order
        for i in range(self.group.rank):
            row = self.group.add_table[self.group.index(self.group.generator(i))]
            cols = []
            for b in range(self.n_gens):
                for k in range(n):
                    col = [0] * self.dim
                    col[b * n + row[k]] = 1
                    cols.append(col)
            mats.append(IntMatrix.from_columns(cols, rows=self.dim))
        return tuple(mats)

    def flatten(self) -> tuple[IntMatrix, tuple[IntMatrix, ...]]:
        """(presentation, actions): the underlying group is coker(presentation)."""
        presentation = IntMatrix.from_columns(list(self.relation_lattice), rows=self.dim)
        return presentation, self.action_matrices

    @cached_property
    def invariants(self) -> tuple[int, tuple[int, ...]]:
        """(free rank, torsion invariant factors) of the underlying abelian group."""
        return cokernel_invariants(
            IntMatrix.from_columns(list(self.relation_lattice), rows=self.dim)
        )

    def is_zero(self) -> bool:
        return lattice_index(self.relation_lattice, self.dim) == 1

    def is_free_presentation(self) -> bool:
        return not self.relation_lattice

    def order(self) -> int | None:
        """Size of the underlying group, or None when infinite."""
        return lattice_index(self.relation_lattice, self.dim)

    def contains_zero(self, flat: Sequence[int]) -> bool:
        """Whether a flat vector represents zero in the module."""
        return in_lattice(self.relation_lattice, flat)

    def generates(self, elements: Iterable[Sequence[GroupRingElement]]) -> bool:
        """Whether the given elements (as Z[G]^n_gens columns) generate the module."""
        lat = submodule_lattice(
            self.group,
            list(self.relation_lattice) + [flatten_vector(e) for e in elements],
            self.dim,
        )
        return lattice_index(lat, self.dim) == 1

    @cached_property
    def compressed(self) -> "CompressedModule":
        return compress(self)

    def same_presentation(self, other: "FPModule") -> bool:
        return (
            self.group == other.group
            and self.n_gens == other.n_gens
            and self.relation_lattice == other.relation_lattice
        )

    def __str__(self) -> str:
        free, torsion = self.invariants
        parts = [f"Z^{free}"] if free else []
        parts.extend(f"Z/{t}" for t in torsion)
        return f"FPModule(Z[{self.group}]^{self.n_gens}, underlying {' + '.join(parts) or '0'})"


def free_generators(group: FiniteAbelianGroup, rank: int) -> list[Column]:
    zero = GroupRingElement.zero(group)
    one = GroupRingElement.one(group)
    return [tuple(one if i == j else zero for i in range(rank)) for j in range(rank)]


@dataclass(frozen=True)
class CompressedModule:
    """
    The underlying abelian group in Smith coordinates: Z/orders[0] + ... (0 means Z),
    with the induced action of each standard group generator.
    """
    orders: tuple[int, ...]
    actions: tuple[IntMatrix, ...]
    to_coords: IntMatrix
    from_coords: IntMatrix

    def reduce(self, v: Sequence[int]) -> Vector:
        return tuple(x % d if d else x for x, d in zip(v, self.orders))

    def coords(self, flat: Sequence[int]) -> Vector:
        return self.reduce(self.to_coords.apply(flat))

    def act(self, g: Sequence[int], v: Sequence[int]) -> Vector:
        """Action of the group element with exponent tuple g."""
        out = tuple(v)
        for mat, k in zip(self.actions, g):
            for _ in range(k):
                out = self.reduce(mat.apply(out))
        return out


def compress(M: FPModule) -> CompressedModule:
    dim = M.dim
    relation_matrix = IntMatrix.from_columns(list(M.relation_lattice), rows=dim)
    form = snf(relation_matrix)
    U = form.U
    U_inv = inverse_unimodular(U) if dim else U
    invariants = list(form.invariants) + [0] * (dim - len(form.invariants))
    kept = [i for i, d in enumerate(invariants) if d != 1]
    orders = tuple(invariants[i] for i in kept)
    to_coords = IntMatrix.from_rows([U.row(i) for i in kept], cols=dim)
    from_coords = IntMatrix.from_columns([U_inv.column(i) for i in kept], rows=dim)
    actions = []
    for A in M.action_matrices:
        induced = to_coords @ A @ from_coords
        actions.append(IntMatrix.from_rows(
            [[x % orders[r] if orders[r] else x for x in induced.row(r)]
             for r in range(len(kept))],
            cols=len(kept),
        ))
    return CompressedModule(orders, tuple(actions), to_coords, from_coords)


# ---------------------------------------------------------------------------
# maps

@dataclass(frozen=True)
class ModuleMap:
    """
    Z[G]-linear map (or semilinear over `hom`) sending source generator j to
    columns[j], an element of Z[target.group]^target.n_gens.
    """
    source: FPModule
    target: FPModule
    columns: tuple[Column, ...]
    hom: GroupHom | None = None
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        cols = tuple(tuple(c) for c in self.columns)
        object.__setattr__(self, "columns", cols)
        if len(cols) != self.source.n_gens:
            raise DimensionError(
                f"{len(cols)} images for {self.source.n_gens} source generators"
            )
        for c in cols:
            if len(c) != self.target.n_gens:
                raise DimensionError(f"Image with {len(c)} entries in a rank {self.target.n_gens} target")
        if self.hom is None:
            if self.source.group != self.target.group:
                raise RingMismatchError(
                    f"Linear map between modules over {self.source.group} and {self.target.group}"
                )
        elif self.hom.source != self.source.group or self.hom.target != self.target.group:
            raise RingMismatchError("Semilinear map homomorphism does not match the module groups")
        if self.validate and not self.is_well_defined():
            raise IllDefinedMapError("Map does not send source relations into target relations")

    @classmethod
    def identity(cls, M: FPModule) -> "ModuleMap":
        return cls(M, M, tuple(free_generators(M.group, M.n_gens)), validate=False)

    @classmethod
    def zero_map(cls, source: FPModule, target: FPModule) -> "ModuleMap":
        z = GroupRingElement.zero(target.group)
        return cls(
            source, target,
            tuple(tuple(z for _ in range(target.n_gens)) for _ in range(source.n_gens)),
            validate=False,
        )

    @classmethod
    def from_matrix(
        cls, source: FPModule, target: FPModule, rows: Sequence[Sequence[GroupRingElement]],
        hom: GroupHom | None = None,
    ) -> "ModuleMap":
        """Build from a target_gens x source_gens matrix of group-ring elements."""
        cols = tuple(tuple(rows[i][j] for i in range(target.n_gens)) for j in range(source.n_gens))
        return cls(source, target, cols, hom)

    @classmethod
    def multiplication(cls, M: FPModule, a: GroupRingElement) -> "ModuleMap":
        """Multiplication by a on M (M -> M)."""
        cols = []
        for j, e in enumerate(free_generators(M.group, M.n_gens)):
            cols.append(tuple(a if i == j else x for i, x in enumerate(e)))
        return cls(M, M, tuple(cols))

    @property
    def group_hom(self) -> GroupHom:
        return self.hom if self.hom is not None else GroupHom.identity(self.source.group)

    @cached_property
    def flat_matrix(self) -> IntMatrix:
        """Matrix of the map on flat coordinates (target dim x source dim)."""
        h = self.group_hom
        tg = self.target.group
        flat_cols = [flatten_vector(c) for c in self.columns]
        columns = []
        for col in flat_cols:
            for g in self.source.group.elements:
                columns.append(translate(tg, col, h.apply(g)))
        return IntMatrix.from_columns(columns, rows=self.target.dim)

    def apply_flat(self, flat: Sequence[int]) -> Vector:
        return self.flat_matrix.apply(flat)

    def apply(self, vec: Sequence[GroupRingElement]) -> Column:
        return unflatten_vector(self.target.group, self.apply_flat(flatten_vector(vec)))

    def is_well_defined(self) -> bool:
        F = self.flat_matrix
        return all(
            in_lattice(self.target.relation_lattice, F.apply(r))
            for r in self.source.relation_lattice
        )

    def is_zero(self) -> bool:
        return all(self.target.contains_zero(flatten_vector(c)) for c in self.columns)

    def __str__(self) -> str:
        return f"ModuleMap({self.source.n_gens} -> {self.target.n_gens} gens over {self.target.group})"


def compose(g: ModuleMap, f: ModuleMap) -> ModuleMap:
    """g after f."""
    if f.target.group != g.source.group or f.target.n_gens != g.source.n_gens:
        raise IllDefinedMapError("Maps are not composable")
    if f.hom is None and g.hom is None:
        hom = None
    else:
        hom = g.group_hom.compose(f.group_hom)
    return ModuleMap(f.source, g.target, tuple(g.apply(c) for c in f.columns), hom, validate=False)


def submodule_on(target: FPModule, gens: Sequence[Sequence[int]]) -> tuple[FPModule, ModuleMap]:
    """
    The submodule of `target` generated by flat vectors, presented on those
    generators, with its inclusion.
    """
    group = target.group
    s = len(gens)
    free = FPModule.free(group, s)
    cols = tuple(unflatten_vector(group, g) for g in gens)
    phi = ModuleMap(free, target, cols, validate=False)
    rel_lattice = preimage_lattice(phi.flat_matrix, target.relation_lattice)
    rels = extract_generators(group, rel_lattice, (), free.dim)
    sub = FPModule.from_flat(group, s, rels)
    return sub, ModuleMap(sub, target, cols, validate=False)


def ker_map(f: ModuleMap) -> tuple[FPModule, ModuleMap]:
    """Kernel of f with its inclusion into f.source."""
    if not f.is_well_defined():
        raise IllDefinedMapError("Kernel of an ill-defined map")
    source = f.source
    P = preimage_lattice(f.flat_matrix, f.target.relation_lattice)
    gens = extract_generators(source.group, P, source.relation_lattice, source.dim)
    logger.debug(f"kernel of {f}: {len(gens)} generators")
    return submodule_on(source, gens)


def image_module(f: ModuleMap) -> tuple[FPModule, ModuleMap]:
    """Image of f, presented on the images of the source generators, with its inclusion."""
    return submodule_on(f.target, [flatten_vector(c) for c in f.columns])


def coker_map(f: ModuleMap) -> tuple[FPModule, ModuleMap]:
    """Cokernel of f with the projection from f.target."""
    if not f.is_well_defined():
        raise IllDefinedMapError("Cokernel of an ill-defined map")
    Q = f.target.with_relations(f.columns)
    proj = ModuleMap(f.target, Q, tuple(free_generators(Q.group, Q.n_gens)), validate=False)
    return Q, proj


def is_injective(f: ModuleMap) -> bool:
    P = preimage_lattice(f.flat_matrix, f.target.relation_lattice)
    return P == f.source.relation_lattice


def is_surjective(f: ModuleMap) -> bool:
    return coker_map(f)[0].is_zero()


def is_exact_at(f: ModuleMap, g: ModuleMap) -> bool:
    """
    Whether im(f) == ker(g) inside f.target.

    Raises:
        IllDefinedMapError: if f.target is not g.source or g o f != 0
    """
    middle = f.target
    if not middle.same_presentation(g.source):
        raise IllDefinedMapError("Maps are not composable")
    G = g.flat_matrix
    for v in f.flat_matrix.columns():
        if not g.target.contains_zero(G.apply(v)):
            raise IllDefinedMapError("Composite of the maps is not zero")
    image = lattice_basis(list(middle.relation_lattice) + f.flat_matrix.columns(), middle.dim)
    kernel = preimage_lattice(G, g.target.relation_lattice)
    return image == kernel


@dataclass(frozen=True)
class Resolution:
    """
    F_k -> ... -> F_1 -> F_0 -> M with F_i = Z[G]^ranks[i].

    differentials[i] is d_(i+1): F_(i+1) -> F_i; the chain stops early when a
    kernel vanishes.
    """
    module: FPModule
    augmentation: ModuleMap
    differentials: tuple[ModuleMap, ...]

    @property
    def ranks(self) -> tuple[int, ...]:
        return (self.augmentation.source.n_gens,) + tuple(
            d.source.n_gens for d in self.differentials
        )

    def free_module(self, i: int) -> FPModule:
        group = self.module.group
        return FPModule.free(group, self.ranks[i] if i < len(self.ranks) else 0)

    def differential(self, i: int) -> ModuleMap:
        """d_i: F_i -> F_(i-1); zero maps beyond the computed range."""
        if i <= 0:
            raise DimensionError("Differentials are indexed from 1")
        if i <= len(self.differentials):
            return self.differentials[i - 1]
        return ModuleMap.zero_map(self.free_module(i), self.free_module(i - 1))


def free_resolution(M: FPModule, length: int) -> Resolution:
    """Free resolution of M computed to F_length (or until a kernel is zero)."""
    if length < 0:
        raise DimensionError(f"Resolution length must be >= 0, got {length}")
    group = M.group
    F0 = FPModule.free(group, M.n_gens)
    aug = ModuleMap(F0, M, tuple(free_generators(group, M.n_gens)), validate=False)
    diffs: list[ModuleMap] = []
    if length >= 1:
        rels = [c for c in M.relations if any(not a.is_zero() for a in c)]
        if rels:
            diffs.append(ModuleMap(FPModule.free(group, len(rels)), F0, tuple(rels), validate=False))
    while diffs and len(diffs) < length:
        K, incl = ker_map(diffs[-1])
        if K.n_gens == 0:
            break
        src = FPModule.free(group, K.n_gens)
        diffs.append(ModuleMap(src, diffs[-1].source, incl.columns, validate=False))
    logger.debug(f"resolution ranks {[F0.n_gens] + [d.source.n_gens for d in diffs]}")
    return Resolution(M, aug, tuple(diffs))


# ---------------------------------------------------------------------------
# base change along group quotients

def base_change_module(q: GroupHom, M: FPModule) -> FPModule:
    """Z[q.target] tensor M over Z[q.source]: push every relation along q."""
    if M.group != q.source:
        raise RingMismatchError("Base change along a map from a different group")
    return FPModule(q.target, M.n_gens, tuple(tuple(push(q, a) for a in col) for col in M.relations))


def base_change_map(q: GroupHom, f: ModuleMap) -> ModuleMap:
    """Base change of a linear map along q."""
    if f.hom is not None:
        raise RingMismatchError("Only linear maps can be base changed")
    return ModuleMap(
        base_change_module(q, f.source),
        base_change_module(q, f.target),
        tuple(tuple(push(q, a) for a in col) for col in f.columns),
        validate=False,
    )


def coinvariants(delta: Subgroup, M: FPModule) -> tuple[FPModule, ModuleMap]:
    """M / J_delta M over Z[G/delta], with the natural semilinear surjection."""
    if delta.ambient != M.group:
        raise RingMismatchError("Subgroup of a different group")
    q = delta.quotient
    MD = base_change_module(q, M)
    proj = ModuleMap(M, MD, tuple(free_generators(q.target, M.n_gens)), hom=q, validate=False)
    return MD, proj


def augmentation_submodule(delta: Subgroup, M: FPModule) -> tuple[Vector, ...]:
    """Hermite basis of J_delta * M + relations, as a lattice in M's flat coordinates."""
    vectors = list(M.relation_lattice)
    gens = free_generators(M.group, M.n_gens)
    for x in rel_aug_ideal(delta):
        for e in gens:
            vectors.append(flatten_vector(tuple(x * a for a in e)))
    return submodule_lattice(M.group, vectors, M.dim)


def lift_through(f: ModuleMap, y: Sequence[int]) -> Vector | None:
    """A flat preimage of the flat target vector y modulo target relations, if any."""
    T = f.target.relation_lattice
    A = f.flat_matrix
    if T:
        A = A.hstack(IntMatrix.from_columns(list(T), rows=f.target.dim))
    x = solve(A, y)
    return None if x is None else x[:f.source.dim]
