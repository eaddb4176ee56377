#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/algebra/groupring.py

"""
Finite abelian groups and their group rings over Z, Z/N and Q.

A group is a product of cyclic factors Z/m_i; elements are exponent tuples,
always enumerated lexicographically (itertools.product order). Group-ring
elements are dense coefficient vectors in that order.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from prolim.src.algebra.zlinalg import IntMatrix, det, inverse_unimodular, kernel_basis, snf
from prolim.src.errors import RingMismatchError

logger = logging.getLogger(__name__)

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """The group Z/m_1 x ... x Z/m_r."""
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(int(m) for m in self.cyclic_orders))
        if any(m < 1 for m in self.cyclic_orders):
            raise RingMismatchError(f"Cyclic orders must be >= 1, got {self.cyclic_orders}")

    @property
    def rank(self) -> int:
        return len(self.cyclic_orders)

    @property
    def order(self) -> int:
        return math.prod(self.cyclic_orders)

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.rank

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        return tuple(itertools.product(*(range(m) for m in self.cyclic_orders)))

    @cached_property
    def _index(self) -> dict[GroupElement, int]:
        return {g: i for i, g in enumerate(self.elements)}

    def index(self, g: Sequence[int]) -> int:
        return self._index[self.normalize(g)]

    def normalize(self, g: Sequence[int]) -> GroupElement:
        if len(g) != self.rank:
            raise RingMismatchError(f"Element {tuple(g)} does not belong to {self}")
        return tuple(x % m for x, m in zip(g, self.cyclic_orders))

    def generator(self, i: int) -> GroupElement:
        return tuple((1 if k == i else 0) % m for k, m in enumerate(self.cyclic_orders))

    def add(self, g: Sequence[int], h: Sequence[int]) -> GroupElement:
        return tuple((a + b) % m for a, b, m in zip(g, h, self.cyclic_orders))

    def neg(self, g: Sequence[int]) -> GroupElement:
        return tuple(-a % m for a, m in zip(g, self.cyclic_orders))

    def scale(self, k: int, g: Sequence[int]) -> GroupElement:
        return tuple((k * a) % m for a, m in zip(g, self.cyclic_orders))

    def element_order(self, g: Sequence[int]) -> int:
        return math.lcm(1, *(m // math.gcd(a, m) for a, m in zip(g, self.cyclic_orders)))

    @cached_property
    def add_table(self) -> tuple[tuple[int, ...], ...]:
        """add_table[i][j] = index(elements[i] + elements[j])."""
        els = self.elements
        return tuple(tuple(self._index[self.add(g, h)] for h in els) for g in els)

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        return tuple(self._index[self.neg(g)] for g in self.elements)

    def __str__(self) -> str:
        if not self.cyclic_orders:
            return "1"
        return " x ".join(f"C{m}" for m in self.cyclic_orders)


class BaseKind(Enum):
    """Coefficient rings a group ring can be built over."""
    INT = "int"
    MOD = "mod"
    RAT = "rat"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class BaseRing:
    """Coefficient ring tag: Z, Z/N or Q."""
    kind: BaseKind = BaseKind.INT
    modulus: int | None = None

    def __post_init__(self):
        if self.kind is BaseKind.MOD:
            if self.modulus is None or self.modulus < 2:
                raise RingMismatchError(f"Modulus must be >= 2, got {self.modulus}")
        elif self.modulus is not None:
            raise RingMismatchError(f"Base ring {self.kind} takes no modulus")

    @classmethod
    def integers(cls) -> "BaseRing":
        return cls(BaseKind.INT)

    @classmethod
    def int_mod(cls, modulus: int) -> "BaseRing":
        return cls(BaseKind.MOD, modulus)

    @classmethod
    def rationals(cls) -> "BaseRing":
        return cls(BaseKind.RAT)

    def coerce(self, x) -> int | Fraction:
        if self.kind is BaseKind.INT:
            if isinstance(x, Fraction):
                if x.denominator != 1:
                    raise RingMismatchError(f"{x} is not an integer")
                return x.numerator
            return int(x)
        if self.kind is BaseKind.MOD:
            if isinstance(x, Fraction):
                return (x.numerator * pow(x.denominator, -1, self.modulus)) % self.modulus
            return int(x) % self.modulus
        return Fraction(x)

    def inverse(self, x) -> int | Fraction:
        if self.kind is BaseKind.INT:
            if x not in (1, -1):
                raise RingMismatchError(f"{x} is not a unit in Z")
            return x
        if self.kind is BaseKind.MOD:
            return pow(int(x), -1, self.modulus)
        return 1 / Fraction(x)

    def __str__(self) -> str:
        if self.kind is BaseKind.MOD:
            return f"Z/{self.modulus}"
        return "Z" if self.kind is BaseKind.INT else "Q"


INT = BaseRing.integers()
RAT = BaseRing.rationals()


@dataclass(frozen=True)
class GroupRingElement:
    """Element of A[G] as a coefficient vector in the group's enumeration order."""
    group: FiniteAbelianGroup
    coeffs: tuple
    base: BaseRing = field(default=INT)

    def __post_init__(self):
        if len(self.coeffs) != self.group.order:
            raise RingMismatchError(
                f"{len(self.coeffs)} coefficients for a group of order {self.group.order}"
            )
        object.__setattr__(self, "coeffs", tuple(self.base.coerce(c) for c in self.coeffs))

    @classmethod
    def zero(cls, group: FiniteAbelianGroup, base: BaseRing = INT) -> "GroupRingElement":
        return cls(group, (0,) * group.order, base)

    @classmethod
    def one(cls, group: FiniteAbelianGroup, base: BaseRing = INT) -> "GroupRingElement":
        return cls.basis(group, group.identity, base)

    @classmethod
    def basis(
        cls, group: FiniteAbelianGroup, g: Sequence[int], base: BaseRing = INT
    ) -> "GroupRingElement":
        coeffs = [0] * group.order
        coeffs[group.index(g)] = 1
        return cls(group, tuple(coeffs), base)

    @classmethod
    def from_terms(
        cls,
        group: FiniteAbelianGroup,
        terms: Iterable[tuple[int, Sequence[int]]],
        base: BaseRing = INT,
    ) -> "GroupRingElement":
        """Sum of coefficient * group element pairs."""
        coeffs = [0] * group.order
        for c, g in terms:
            coeffs[group.index(g)] += c
        return cls(group, tuple(coeffs), base)

    def _check_compatible(self, other: "GroupRingElement") -> None:
        if self.group != other.group:
            raise RingMismatchError(f"Groups differ: {self.group} vs {other.group}")
        if self.base != other.base:
            raise RingMismatchError(f"Base rings differ: {self.base} vs {other.base}")

    def __add__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        return GroupRingElement(
            self.group, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.base
        )

    def __sub__(self, other: "GroupRingElement") -> "GroupRingElement":
        self._check_compatible(other)
        return GroupRingElement(
            self.group, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.base
        )

    def __neg__(self) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple(-a for a in self.coeffs), self.base)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        return gr_mul(self, other)

    def scale(self, k) -> "GroupRingElement":
        return GroupRingElement(self.group, tuple(k * a for a in self.coeffs), self.base)

    def coefficient(self, g: Sequence[int]):
        return self.coeffs[self.group.index(g)]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def to_base(self, base: BaseRing) -> "GroupRingElement":
        return GroupRingElement(self.group, self.coeffs, base)

    def support(self) -> list[GroupElement]:
        return [g for g, c in zip(self.group.elements, self.coeffs) if c]

    def __str__(self) -> str:
        terms = []
        for g, c in zip(self.group.elements, self.coeffs):
            if not c:
                continue
            if g == self.group.identity:
                terms.append(str(c))
            else:
                label = "g" + "".join(str(x) for x in g)
                terms.append(label if c == 1 else f"{c}*{label}")
        return " + ".join(terms) if terms else "0"


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    """
    Convolution product in A[G].

    Raises:
        RingMismatchError: if the operands live over different groups or bases
    """
    a._check_compatible(b)
    table = a.group.add_table
    out = [0] * a.group.order
    b_terms = [(j, c) for j, c in enumerate(b.coeffs) if c]
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        row = table[i]
        for j, cb in b_terms:
            out[row[j]] += ca * cb
    return GroupRingElement(a.group, tuple(out), a.base)


def regular_matrix(a: GroupRingElement) -> IntMatrix:
    """
    Matrix of x -> a*x on the basis of group elements.

    Raises:
        RingMismatchError: unless the base ring is Z
    """
    if a.base.kind is not BaseKind.INT:
        raise RingMismatchError(f"regular_matrix needs an integral element, got base {a.base}")
    group = a.group
    table, neg = group.add_table, group.neg_table
    n = group.order
    # entry (k, j) is the coefficient of g_k - g_j
    return IntMatrix.from_rows(
        [[a.coeffs[table[k][neg[j]]] for j in range(n)] for k in range(n)], cols=n
    )


def augmentation(a: GroupRingElement):
    return sum(a.coeffs, a.base.coerce(0))


def is_non_zero_divisor(a: GroupRingElement) -> bool:
    """True iff multiplication by `a` is injective, i.e. det(regular_matrix(a)) != 0."""
    return det(regular_matrix(a)) != 0


def partial_trace(
    group: FiniteAbelianGroup, pi: Sequence[int], length: int
) -> GroupRingElement:
    """1 + pi + ... + pi^(length-1) with integer coefficients."""
    if length < 1:
        raise RingMismatchError(f"Partial trace length must be >= 1, got {length}")
    return GroupRingElement.from_terms(group, ((1, group.scale(i, pi)) for i in range(length)))


@dataclass(frozen=True)
class GroupHom:
    """Homomorphism of finite abelian groups given by the images of the standard generators."""
    source: FiniteAbelianGroup
    target: FiniteAbelianGroup
    generator_images: tuple[GroupElement, ...]

    def __post_init__(self):
        if len(self.generator_images) != self.source.rank:
            raise RingMismatchError(
                f"{len(self.generator_images)} images for {self.source.rank} generators"
            )
        images = tuple(self.target.normalize(img) for img in self.generator_images)
        object.__setattr__(self, "generator_images", images)
        for m, img in zip(self.source.cyclic_orders, images):
            if self.target.scale(m, img) != self.target.identity:
                raise RingMismatchError(
                    f"Image {img} of a generator of order {m} does not respect the order"
                )

    @classmethod
    def identity(cls, group: FiniteAbelianGroup) -> "GroupHom":
        return cls(group, group, tuple(group.generator(i) for i in range(group.rank)))

    def apply(self, g: Sequence[int]) -> GroupElement:
        out = self.target.identity
        for k, img in zip(g, self.generator_images):
            if k:
                out = self.target.add(out, self.target.scale(k, img))
        return out

    @cached_property
    def index_map(self) -> tuple[int, ...]:
        """index_map[i] = target index of the image of source element i."""
        return tuple(self.target.index(self.apply(g)) for g in self.source.elements)

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.target != self.source:
            raise RingMismatchError("Homomorphisms are not composable")
        return GroupHom(
            other.source,
            self.target,
            tuple(self.apply(img) for img in other.generator_images),
        )

    def is_surjective(self) -> bool:
        return len(set(self.index_map)) == self.target.order

    def kernel_elements(self) -> list[GroupElement]:
        identity = self.target.index(self.target.identity)
        return [g for g, i in zip(self.source.elements, self.index_map) if i == identity]


def push(h: GroupHom, a: GroupRingElement) -> GroupRingElement:
    """Ring map A[source] -> A[target] induced by h (sums coefficients over fibres)."""
    if a.group != h.source:
        raise RingMismatchError(f"Element over {a.group} pushed along a map from {h.source}")
    out = [0] * h.target.order
    for i, c in zip(h.index_map, a.coeffs):
        if c:
            out[i] += c
    return GroupRingElement(h.target, tuple(out), a.base)


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of `ambient` generated by `generators`."""
    ambient: FiniteAbelianGroup
    generators: tuple[GroupElement, ...]
    projection: GroupHom | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(
            self, "generators", tuple(self.ambient.normalize(g) for g in self.generators)
        )

    @classmethod
    def trivial(cls, ambient: FiniteAbelianGroup) -> "Subgroup":
        return cls(ambient, ())

    @classmethod
    def whole(cls, ambient: FiniteAbelianGroup) -> "Subgroup":
        return cls(ambient, tuple(ambient.generator(i) for i in range(ambient.rank)))

    @classmethod
    def from_kernel(cls, hom: GroupHom) -> "Subgroup":
        """ker(hom), remembering hom as the quotient projection (hom must be onto)."""
        if not hom.is_surjective():
            raise RingMismatchError("Quotient projection must be surjective")
        chosen: list[GroupElement] = []
        span = {hom.source.identity}
        for g in hom.kernel_elements():
            if g not in span:
                chosen.append(g)
                span = _closure(hom.source, chosen)
        return cls(hom.source, tuple(chosen), hom)

    @cached_property
    def elements(self) -> tuple[GroupElement, ...]:
        members = _closure(self.ambient, self.generators)
        return tuple(g for g in self.ambient.elements if g in members)

    @property
    def order(self) -> int:
        return len(self.elements)

    def contains(self, g: Sequence[int]) -> bool:
        return self.ambient.normalize(g) in set(self.elements)

    @cached_property
    def quotient(self) -> GroupHom:
        """The projection ambient -> ambient/self, in Smith coordinates unless given."""
        if self.projection is not None:
            return self.projection
        r = self.ambient.rank
        columns = [tuple(m if i == k else 0 for i in range(r)) for k, m in
                   enumerate(self.ambient.cyclic_orders)]
        columns.extend(self.generators)
        form = snf(IntMatrix.from_columns(columns, rows=r))
        kept = [i for i, d in enumerate(form.invariants) if d != 1]
        target = FiniteAbelianGroup(tuple(form.invariants[i] for i in kept))
        images = tuple(
            tuple(form.U[i, j] for i in kept) for j in range(r)
        )
        return GroupHom(self.ambient, target, images)

    @cached_property
    def cyclic_decomposition(self) -> tuple[tuple[GroupElement, int], ...]:
        """
        Independent generators (h_i, n_i), n_i > 1, with self = <h_1> x ... x <h_k>.

        The relation lattice of `generators` is put in Smith form; h_i is the
        image of the i-th Smith basis vector.
        """
        s = len(self.generators)
        if not s:
            return ()
        r = self.ambient.rank
        columns = list(self.generators) + [
            tuple(m if i == k else 0 for i in range(r)) for k, m in enumerate(self.ambient.cyclic_orders)
        ]
        kernel = kernel_basis(IntMatrix.from_columns(columns, rows=r))
        relations = IntMatrix.from_columns([col[:s] for col in kernel.columns()], rows=s)
        form = snf(relations)
        basis = inverse_unimodular(form.U)
        out = []
        for i, n in enumerate(form.invariants):
            if n == 1:
                continue
            h = self.ambient.identity
            for c, g in zip(basis.column(i), self.generators):
                h = self.ambient.add(h, self.ambient.scale(c, g))
            out.append((h, n))
        return tuple(out)


def _closure(group: FiniteAbelianGroup, generators: Sequence[Sequence[int]]) -> set[GroupElement]:
    members = {group.identity}
    frontier = [group.identity]
    while frontier:
        g = frontier.pop()
        for s in generators:
            h = group.add(g, s)
            if h not in members:
                members.add(h)
                frontier.append(h)
    return members


def norm_element(delta: Subgroup) -> GroupRingElement:
    """Sum of the elements of delta, in Z[ambient]."""
    return GroupRingElement.from_terms(delta.ambient, ((1, h) for h in delta.elements))


def subgroup_idempotent(delta: Subgroup) -> GroupRingElement:
    """|delta|^-1 * sum of delta, as a Q-coefficient element."""
    return norm_element(delta).to_base(RAT).scale(Fraction(1, delta.order))


def rel_aug_ideal(delta: Subgroup) -> list[GroupRingElement]:
    """Generators h - 1 (h in delta, h != 1) of the relative augmentation ideal."""
    one = GroupRingElement.one(delta.ambient)
    return [
        GroupRingElement.basis(delta.ambient, h) - one
        for h in delta.elements
        if h != delta.ambient.identity
    ]


def characters(group: FiniteAbelianGroup) -> list[tuple[int, ...]]:
    """
    Characters of the group as exponent tuples c, where
    chi_c(g) = exp(2*pi*i * sum(c_k * g_k / m_k)).
    """
    return list(group.elements)


def character_order(group: FiniteAbelianGroup, chi: Sequence[int]) -> int:
    return group.element_order(chi)


def character_quotient(group: FiniteAbelianGroup, chi: Sequence[int]) -> GroupHom:
    """The surjection G -> C_c, c = order(chi), whose kernel is ker(chi)."""
    c = character_order(group, chi)
    images = tuple(((ck * c // m) % c,) for ck, m in zip(chi, group.cyclic_orders))
    return GroupHom(group, FiniteAbelianGroup((c,)), images)


def character_quotients(group: FiniteAbelianGroup) -> list[tuple[tuple[int, ...], GroupHom]]:
    """One (character, cyclic quotient) pair per distinct character kernel."""
    seen: set[frozenset[int]] = set()
    out = []
    for chi in characters(group):
        hom = character_quotient(group, chi)
        kernel = frozenset(i for i, g in enumerate(group.elements)
                           if hom.apply(g) == hom.target.identity)
        if kernel in seen:
            continue
        seen.add(kernel)
        out.append((tuple(chi), hom))
    logger.debug(f"{len(out)} character kernels for group {group}")
    return out
