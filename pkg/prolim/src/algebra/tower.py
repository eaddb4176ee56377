#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/algebra/tower.py

"""
Truncated towers of group rings R_m = Z[Gamma_m], Gamma_m = (Z/p^n_m)^d.

Level 0 is the trivial group, so R_0 = Z, T_0 = 1 and varpi_0 = 0. The
projection rho_m: Gamma_m -> Gamma_(m-1) reduces every coordinate.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from sympy import isprime

from prolim.src.algebra.fpmod import (
    FPModule,
    ModuleMap,
    coinvariants,
    flatten_vector,
    free_generators,
    is_injective,
    is_surjective,
    ker_map,
    submodule_on,
    unflatten_vector,
)
from prolim.src.algebra.groupring import (
    RAT,
    FiniteAbelianGroup,
    GroupHom,
    GroupRingElement,
    Subgroup,
    gr_mul,
    partial_trace,
    push,
)
from prolim.src.algebra.zlinalg import AbelianInvariants, Vector, kernel_basis, solve
from prolim.src.errors import IllDefinedMapError, TowerError

logger = logging.getLogger(__name__)

DEFAULT_MAX_GROUP_ORDER = 128


@dataclass(frozen=True)
class TowerSpec:
    """
    A prime p, rank d, top level M and exponent schedule n_0 = 0 < n_1 < ... < n_M.

    Custom schedules are only accepted for d = 1; otherwise n_m = m.
    """
    p: int
    d: int = 1
    max_level: int = 1
    pi_coordinate: int = 0
    schedule: tuple[int, ...] | None = None

    def __post_init__(self):
        if not isprime(self.p):
            raise TowerError(f"p must be prime, got {self.p}")
        if self.d < 1:
            raise TowerError(f"Rank d must be >= 1, got {self.d}")
        if self.max_level < 0:
            raise TowerError(f"Top level must be >= 0, got {self.max_level}")
        if not 0 <= self.pi_coordinate < self.d:
            raise TowerError(f"pi coordinate {self.pi_coordinate} outside 0..{self.d - 1}")
        if self.schedule is not None:
            sched = tuple(int(n) for n in self.schedule)
            object.__setattr__(self, "schedule", sched)
            if len(sched) != self.max_level + 1:
                raise TowerError(
                    f"Schedule {sched} needs {self.max_level + 1} entries (levels 0..{self.max_level})"
                )
            if sched[0] != 0:
                raise TowerError(f"Schedule must start at n_0 = 0, got {sched[0]}")
            for m in range(self.max_level):
                if sched[m + 1] <= sched[m]:
                    raise TowerError(
                        f"Schedule {sched} is not strictly increasing at level {m + 1}"
                    )
            if self.d != 1 and sched != tuple(range(self.max_level + 1)):
                raise TowerError("Custom exponent schedules are only supported for d = 1")

    @property
    def exponents(self) -> tuple[int, ...]:
        if self.schedule is not None:
            return self.schedule
        return tuple(range(self.max_level + 1))

    def top_order(self) -> int:
        return self.p ** (self.exponents[-1] * self.d)

    @classmethod
    def from_dict(cls, data: dict) -> "TowerSpec":
        """Accepts keys p, d, M (or max_level), pi (or pi_coordinate), schedule."""
        known = {"p", "d", "M", "max_level", "pi", "pi_coordinate", "schedule"}
        unknown = set(data) - known
        if unknown:
            raise TowerError(f"Unknown tower keys: {sorted(unknown)}")
        if "p" not in data:
            raise TowerError("Tower spec needs a prime p")
        try:
            schedule = data.get("schedule")
            return cls(
                p=int(data["p"]),
                d=int(data.get("d", 1)),
                max_level=int(data.get("M", data.get("max_level", 1))),
                pi_coordinate=int(data.get("pi", data.get("pi_coordinate", 0))),
                schedule=None if schedule is None else tuple(int(n) for n in schedule),
            )
        except TowerError:
            raise
        except (TypeError, ValueError) as e:
            raise TowerError(f"Invalid tower spec {data}: {e}")

    def as_dict(self) -> dict:
        out = {"p": self.p, "d": self.d, "M": self.max_level, "pi": self.pi_coordinate}
        if self.schedule is not None:
            out["schedule"] = list(self.schedule)
        return out

    def label(self) -> str:
        text = f"p={self.p},d={self.d},M={self.max_level}"
        if self.schedule is not None:
            text += ",n=" + "/".join(str(n) for n in self.schedule)
        return text


@dataclass(frozen=True)
class Tower:
    """Groups, projections and the distinguished elements of every level."""
    spec: TowerSpec
    groups: tuple[FiniteAbelianGroup, ...]
    projections: tuple[GroupHom | None, ...]

    @property
    def p(self) -> int:
        return self.spec.p

    @property
    def max_level(self) -> int:
        return self.spec.max_level

    def levels(self) -> range:
        return range(self.max_level + 1)

    def _check_level(self, m: int) -> None:
        if not 0 <= m <= self.max_level:
            raise TowerError(f"Level {m} outside 0..{self.max_level}")

    def group(self, m: int) -> FiniteAbelianGroup:
        self._check_level(m)
        return self.groups[m]

    def n(self, m: int) -> int:
        self._check_level(m)
        return self.spec.exponents[m]

    def rho(self, m: int) -> GroupHom:
        """Projection Gamma_m -> Gamma_(m-1), m >= 1."""
        self._check_level(m)
        if m == 0:
            raise TowerError("Level 0 has no projection")
        return self.projections[m]

    def rho_down(self, top: int, bottom: int) -> GroupHom:
        """Composite projection Gamma_top -> Gamma_bottom."""
        hom = GroupHom.identity(self.group(top))
        for k in range(top, bottom, -1):
            hom = self.rho(k).compose(hom)
        return hom

    def delta(self, m: int) -> Subgroup:
        """ker(rho_m), remembering rho_m as its quotient map."""
        return Subgroup.from_kernel(self.rho(m))

    def pi(self, m: int) -> tuple[int, ...]:
        return self.group(m).generator(self.spec.pi_coordinate)

    def one(self, m: int) -> GroupRingElement:
        return GroupRingElement.one(self.group(m))

    def varpi(self, m: int) -> GroupRingElement:
        group = self.group(m)
        return GroupRingElement.basis(group, self.pi(m)) - GroupRingElement.one(group)

    def trace(self, m: int) -> GroupRingElement:
        """T_m = 1 + pi_m + ... + pi_m^(p^n_m - 1)."""
        return partial_trace(self.group(m), self.pi(m), self.p ** self.n(m))

    def partial(self, m: int, j: int) -> GroupRingElement:
        """T_(m,j) = sum of the first p^n_j powers of pi_m (j <= m)."""
        if not 0 <= j <= m:
            raise TowerError(f"Partial trace index {j} outside 0..{m}")
        return partial_trace(self.group(m), self.pi(m), self.p ** self.n(j))

    def idempotent(self, m: int) -> GroupRingElement:
        """e_m = p^-n_m T_m over Q."""
        return self.trace(m).to_base(RAT).scale(Fraction(1, self.p ** self.n(m)))

    def ring(self, m: int, rank: int = 1) -> FPModule:
        return FPModule.free(self.group(m), rank)

    def verify_invariants(self) -> list[str]:
        """Descriptions of violated tower identities (empty when all hold)."""
        problems = []
        p = self.p
        if self.trace(0) != self.one(0) or not self.varpi(0).is_zero():
            problems.append("level 0 must have T_0 = 1 and varpi_0 = 0")
        for m in self.levels():
            if self.group(m).element_order(self.pi(m)) != p ** self.n(m):
                problems.append(f"order of pi_{m} is not p^n_{m}")
            if not gr_mul(self.varpi(m), self.trace(m)).is_zero():
                problems.append(f"varpi_{m} * T_{m} != 0")
            if m >= 1:
                expected = self.trace(m - 1).scale(p ** (self.n(m) - self.n(m - 1)))
                if push(self.rho(m), self.trace(m)) != expected:
                    problems.append(f"rho_{m}(T_{m}) != p^(n_{m}-n_{m - 1}) T_{m - 1}")
                if push(self.rho(m), self.idempotent(m)) != self.idempotent(m - 1):
                    problems.append(f"rho_{m}(e_{m}) != e_{m - 1}")
        return problems


def build_tower(spec: TowerSpec, max_group_order: int = DEFAULT_MAX_GROUP_ORDER) -> Tower:
    """
    Build and verify a tower.

    Raises:
        TowerError: if the top group exceeds the order cap or an identity fails
    """
    if spec.top_order() > max_group_order:
        raise TowerError(
            f"Tower {spec.label()} has top group order {spec.top_order()} above the cap {max_group_order}"
        )
    groups = tuple(
        FiniteAbelianGroup((spec.p ** n,) * spec.d) for n in spec.exponents
    )
    projections: list[GroupHom | None] = [None]
    for m in range(1, spec.max_level + 1):
        source, target = groups[m], groups[m - 1]
        projections.append(
            GroupHom(source, target, tuple(target.generator(i) for i in range(spec.d)))
        )
    tower = Tower(spec, groups, tuple(projections))
    problems = tower.verify_invariants()
    if problems:
        raise TowerError(f"Tower {spec.label()} fails: {'; '.join(problems)}")
    logger.info(f"Built tower {spec.label()} with |Gamma_M| = {groups[-1].order}")
    return tower


# ---------------------------------------------------------------------------
# compatible elements

@dataclass(frozen=True)
class TowerElement:
    """One group-ring element per level."""
    tower: Tower
    levels: tuple[GroupRingElement, ...]

    def __post_init__(self):
        if len(self.levels) != self.tower.max_level + 1:
            raise TowerError(
                f"{len(self.levels)} levels given for a tower with top level {self.tower.max_level}"
            )

    def incompatible_levels(self) -> list[int]:
        """Levels m with rho_(m+1)(x_(m+1)) != x_m."""
        return [
            m for m in range(self.tower.max_level)
            if push(self.tower.rho(m + 1), self.levels[m + 1]) != self.levels[m]
        ]

    def is_compatible(self) -> bool:
        return not self.incompatible_levels()

    def __add__(self, other: "TowerElement") -> "TowerElement":
        return TowerElement(self.tower, tuple(a + b for a, b in zip(self.levels, other.levels)))

    def __sub__(self, other: "TowerElement") -> "TowerElement":
        return TowerElement(self.tower, tuple(a - b for a, b in zip(self.levels, other.levels)))

    def __mul__(self, other: "TowerElement") -> "TowerElement":
        return TowerElement(self.tower, tuple(gr_mul(a, b) for a, b in zip(self.levels, other.levels)))

    @classmethod
    def of(cls, tower: Tower, maker) -> "TowerElement":
        """Build from a function level -> element, e.g. TowerElement.of(t, t.varpi)."""
        return cls(tower, tuple(maker(m) for m in tower.levels()))


# ---------------------------------------------------------------------------
# tower modules

@dataclass(frozen=True)
class TowerModule:
    """
    Modules M_(m) over R_m with transitions M_(m+1) -> M_(m) semilinear over rho.

    transitions[m] goes from levels[m+1] to levels[m].
    """
    tower: Tower
    levels: tuple[FPModule, ...]
    transitions: tuple[ModuleMap, ...]
    name: str = ""
    pro_discrete: bool = field(default=False, compare=False)

    def __post_init__(self):
        if len(self.levels) != self.tower.max_level + 1:
            raise TowerError(f"{len(self.levels)} module levels for top level {self.tower.max_level}")
        if len(self.transitions) != self.tower.max_level:
            raise TowerError(f"{len(self.transitions)} transitions for top level {self.tower.max_level}")
        for m, f in enumerate(self.transitions):
            if not f.source.same_presentation(self.levels[m + 1]) or not f.target.same_presentation(self.levels[m]):
                raise IllDefinedMapError(f"Transition {m + 1} -> {m} does not connect the levels")

    def surjective_transitions(self) -> list[bool]:
        return [is_surjective(f) for f in self.transitions]

    def base_change_map(self, m: int) -> ModuleMap:
        """
        The map from the coinvariants of levels[m+1] under ker(rho_(m+1)) to
        levels[m] induced by the transition.
        """
        delta = self.tower.delta(m + 1)
        MD, _ = coinvariants(delta, self.levels[m + 1])
        return ModuleMap(MD, self.levels[m], self.transitions[m].columns)

    def base_change_defect(self, m: int) -> tuple[bool, AbelianInvariants]:
        """(is isomorphism, invariants of the kernel) of base_change_map(m)."""
        kappa = self.base_change_map(m)
        K, _ = ker_map(kappa)
        iso = is_injective(kappa) and is_surjective(kappa)
        return iso, AbelianInvariants.from_pair(K.invariants)

    def check_pro_discrete(self) -> list[int]:
        """Levels m at which the base-change map m+1 -> m is not an isomorphism."""
        return [m for m in range(self.tower.max_level) if not self.base_change_defect(m)[0]]


def _free_transitions(tower: Tower, modules: Sequence[FPModule]) -> tuple[ModuleMap, ...]:
    """generator -> generator transitions over rho."""
    out = []
    for m in range(tower.max_level):
        src, tgt = modules[m + 1], modules[m]
        out.append(ModuleMap(src, tgt, tuple(free_generators(tgt.group, tgt.n_gens)), hom=tower.rho(m + 1)))
    return tuple(out)


def free_tower(tower: Tower, rank: int = 1) -> TowerModule:
    levels = tuple(tower.ring(m, rank) for m in tower.levels())
    return TowerModule(tower, levels, _free_transitions(tower, levels), f"free{rank}", True)


def _cyclic_tower(tower: Tower, name: str, relations_at, pro_discrete: bool) -> TowerModule:
    levels = tuple(
        FPModule.cyclic(tower.group(m), [r for r in relations_at(m) if not r.is_zero()])
        for m in tower.levels()
    )
    return TowerModule(tower, levels, _free_transitions(tower, levels), name, pro_discrete)


def trivial_tower(tower: Tower) -> TowerModule:
    """Z with trivial action at every level."""
    def relations(m):
        group = tower.group(m)
        one = GroupRingElement.one(group)
        return [GroupRingElement.basis(group, group.generator(i)) - one for i in range(group.rank)]
    return _cyclic_tower(tower, "trivial", relations, True)


def mod_p_tower(tower: Tower) -> TowerModule:
    """R_m / p."""
    return _cyclic_tower(tower, "mod_p", lambda m: [tower.one(m).scale(tower.p)], True)


def varpi_ideal_tower(tower: Tower) -> TowerModule:
    """The ideals R_m varpi_m, presented as R_m / ann(varpi_m) = R_m / R_m T_m."""
    levels = tuple(ideal_I_varpi(tower, m)[0] for m in tower.levels())
    return TowerModule(tower, levels, _free_transitions(tower, levels), "varpi_ideal", False)


def ideal_I_varpi(tower: Tower, m: int) -> tuple[FPModule, ModuleMap]:
    """R_m varpi_m with its embedding into R_m (generator -> varpi_m)."""
    tower._check_level(m)
    module = FPModule.cyclic(tower.group(m), [tower.trace(m)])
    embedding = ModuleMap(module, tower.ring(m), ((tower.varpi(m),),))
    return module, embedding


def annihilator(tower: Tower, m: int, a: GroupRingElement) -> FPModule:
    """R_m / ann(a), with ann(a) computed as the kernel of multiplication by a."""
    R = tower.ring(m)
    _, incl = ker_map(ModuleMap.multiplication(R, a))
    return R.with_relations(incl.columns)


def e_module(tower: Tower, m: int) -> FPModule:
    """R_m e_m as R_m / ann(e_m); ann(e_m) = ann(p^n_m e_m) = ann(T_m)."""
    return annihilator(tower, m, tower.trace(m))


def q_module(tower: Tower, m: int) -> FPModule:
    """Q_m = R_m e_m / R_m T_m, inside R_m / ann(e_m) (T_m corresponds to T_m e_m)."""
    if not 1 <= m <= tower.max_level:
        raise TowerError(f"Q_m needs 1 <= m <= {tower.max_level}, got {m}")
    return e_module(tower, m).with_relations([(tower.trace(m),)])


def q_module_by_p_power(tower: Tower, m: int) -> FPModule:
    """R_m e_m / p^n_m R_m e_m."""
    return e_module(tower, m).with_relations([(tower.one(m).scale(tower.p ** tower.n(m)),)])


# ---------------------------------------------------------------------------
# presentation chains theta_(m): R_m^t -> R_m^s

CHAIN_KINDS = ("varpi", "identity", "p", "zero", "random")


@dataclass(frozen=True)
class ChainTower:
    """
    A compatible family of maps theta_(m): R_m^t -> R_m^s.

    matrices[m] is an s x t matrix over R_m; compatibility means
    rho_(m+1)(matrices[m+1]) == matrices[m].
    """
    tower: Tower
    kind: str
    t: int
    s: int
    matrices: tuple[tuple[tuple[GroupRingElement, ...], ...], ...]

    def __post_init__(self):
        if self.kind not in CHAIN_KINDS:
            raise TowerError(f"Unknown chain kind {self.kind}; expected one of {CHAIN_KINDS}")
        for m in range(self.tower.max_level):
            hom = self.tower.rho(m + 1)
            pushed = tuple(tuple(push(hom, a) for a in row) for row in self.matrices[m + 1])
            if pushed != self.matrices[m]:
                raise IllDefinedMapError(f"Chain is not compatible between levels {m + 1} and {m}")

    @classmethod
    def scalar(cls, tower: Tower, kind: str) -> "ChainTower":
        """Rank-one chains: multiplication by varpi_m, 1, p or 0."""
        makers = {
            "varpi": tower.varpi,
            "identity": tower.one,
            "p": lambda m: tower.one(m).scale(tower.p),
            "zero": lambda m: GroupRingElement.zero(tower.group(m)),
        }
        if kind not in makers:
            raise TowerError(f"No scalar chain named {kind}")
        return cls(tower, kind, 1, 1, tuple(((makers[kind](m),),) for m in tower.levels()))

    @classmethod
    def random(cls, tower: Tower, rng: random.Random, t: int | None = None, s: int | None = None) -> "ChainTower":
        """Top-level matrix with coefficients in [-2, 2], pushed down to every level."""
        t = t if t is not None else rng.randint(1, 2)
        s = s if s is not None else rng.randint(1, 2)
        top = tower.group(tower.max_level)
        top_matrix = tuple(
            tuple(GroupRingElement(top, tuple(rng.randint(-2, 2) for _ in range(top.order))) for _ in range(t))
            for _ in range(s)
        )
        matrices = [top_matrix]
        for m in range(tower.max_level, 0, -1):
            hom = tower.rho(m)
            matrices.append(tuple(tuple(push(hom, a) for a in row) for row in matrices[-1]))
        return cls(tower, "random", t, s, tuple(reversed(matrices)))

    @classmethod
    def from_kind(cls, tower: Tower, kind: str, rng: random.Random | None = None) -> "ChainTower":
        if kind == "random":
            return cls.random(tower, rng or random.Random(0))
        return cls.scalar(tower, kind)

    def theta(self, m: int) -> ModuleMap:
        R_t, R_s = self.tower.ring(m, self.t), self.tower.ring(m, self.s)
        return ModuleMap.from_matrix(R_t, R_s, self.matrices[m])

    @cached_property
    def kernels(self) -> tuple[tuple[FPModule, ModuleMap], ...]:
        """(K_m, inclusion into R_m^t) per level."""
        return tuple(ker_map(self.theta(m)) for m in self.tower.levels())

    @cached_property
    def kernel_lattices(self) -> tuple[tuple[Vector, ...], ...]:
        """ker(theta_m) as a saturated lattice in the flat coordinates of R_m^t."""
        return tuple(
            tuple(kernel_basis(self.theta(m).flat_matrix).columns()) for m in self.tower.levels()
        )

    def kernel(self, m: int) -> tuple[FPModule, ModuleMap]:
        return self.kernels[m]

    def kernel_tower(self) -> TowerModule:
        """K_m with transitions induced by rho on R^t."""
        return self._kernel_tower

    @cached_property
    def _kernel_tower(self) -> TowerModule:
        levels = tuple(K for K, _ in self.kernels)
        transitions = []
        for m in range(self.tower.max_level):
            K_hi, incl_hi = self.kernels[m + 1]
            K_lo, incl_lo = self.kernels[m]
            hom = self.tower.rho(m + 1)
            cols = []
            for gen in incl_hi.columns:
                image = flatten_vector(tuple(push(hom, a) for a in gen))
                coords = solve(incl_lo.flat_matrix, image) if K_lo.n_gens else (
                    () if not any(image) else None
                )
                if coords is None:
                    raise IllDefinedMapError(f"Kernel at level {m + 1} does not map into kernel at level {m}")
                cols.append(unflatten_vector(K_lo.group, coords) if K_lo.n_gens else ())
            transitions.append(ModuleMap(K_hi, K_lo, tuple(cols), hom=hom))
        return TowerModule(self.tower, levels, tuple(transitions), f"ker({self.kind})")

    def stable_kernel(self, m: int) -> FPModule:
        """Image of the top-level kernel K_M in R_m^t."""
        top = self.tower.max_level
        _, incl = self.kernels[top]
        hom = self.tower.rho_down(top, m)
        vectors = [flatten_vector(tuple(push(hom, a) for a in gen)) for gen in incl.columns]
        module, _ = submodule_on(self.tower.ring(m, self.t), vectors)
        return module

    @cached_property
    def quotients(self) -> tuple[FPModule, ...]:
        """M'_(m) = R_m^t / K_m per level."""
        return tuple(
            self.tower.ring(m, self.t).with_relations(incl.columns) for m, (_, incl) in zip(self.tower.levels(), self.kernels)
        )

    def quotient(self, m: int) -> FPModule:
        return self.quotients[m]

    def quotient_tower(self) -> TowerModule:
        levels = self.quotients
        return TowerModule(self.tower, levels, _free_transitions(self.tower, levels), f"coim({self.kind})")

    def describe(self) -> dict:
        return {"kind": self.kind, "t": self.t, "s": self.s}


def kernel_tower(chain: ChainTower) -> TowerModule:
    return chain.kernel_tower()
