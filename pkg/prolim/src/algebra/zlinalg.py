#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/algebra/zlinalg.py

"""
Exact integer linear algebra.

Hermite and Smith normal forms with transforms, kernels, solving and cokernel
invariants over the integers. Every flattened module computation in prolim
ends up here. Entries are Python ints, so nothing overflows.

Pivot rule (HNF and SNF alike): smallest nonzero absolute value, ties broken
by the lowest (row, col) index. Reports depend on it being deterministic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from sympy.polys.domains import GF, ZZ
from sympy.polys.matrices import DomainMatrix

from prolim.src.errors import DimensionError

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True)
class IntMatrix:
    """Dense row-major matrix of arbitrary-precision integers."""
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DimensionError(f"Negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        """Build from a list of rows. `cols` is needed when there are no rows."""
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat: list[int] = []
        for row in rows:
            if len(row) != cols:
                raise DimensionError(f"Ragged row of length {len(row)}, expected {cols}")
            flat.extend(int(x) for x in row)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        """Build from a list of columns, each of length `rows`."""
        for column in columns:
            if len(column) != rows:
                raise DimensionError(f"Column of length {len(column)}, expected {rows}")
        return cls.from_rows(
            [[column[i] for column in columns] for i in range(rows)], cols=len(columns)
        )

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(n, n, tuple(values[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Vector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> Vector:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.cols)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        other_cols = other.columns()
        return IntMatrix.from_rows(
            [[sum(a * b for a, b in zip(self.row(i), col) if a) for col in other_cols]
             for i in range(self.rows)],
            cols=other.cols,
        )

    def apply(self, v: Sequence[int]) -> Vector:
        """Return A·v."""
        if len(v) != self.cols:
            raise DimensionError(f"Vector of length {len(v)} for {self.rows}x{self.cols} matrix")
        return tuple(sum(a * b for a, b in zip(self.row(i), v) if a) for i in range(self.rows))

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise DimensionError("hstack needs equal row counts")
        return IntMatrix.from_rows(
            [list(self.row(i)) + list(other.row(i)) for i in range(self.rows)],
            cols=self.cols + other.cols,
        )

    def vstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.cols:
            raise DimensionError("vstack needs equal column counts")
        return IntMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def scale(self, k: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(k * x for x in self.entries))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return rank(self)

    def det(self) -> int:
        return det(self)

    def __str__(self) -> str:
        return "[" + ", ".join(str(list(self.row(i))) for i in range(self.rows)) + "]"


@dataclass(frozen=True)
class SmithForm:
    """U·A·V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...."""
    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    invariants: tuple[int, ...]


# ---------------------------------------------------------------------------
# row and column operations on list-of-lists

def _row_sub(a: list[list[int]], target: int, source: int, q: int, start: int = 0) -> None:
    """row[target] -= q * row[source], from column `start` on."""
    rt, rs = a[target], a[source]
    for k in range(start, len(rt)):
        if rs[k]:
            rt[k] -= q * rs[k]


def _col_sub(a: list[list[int]], target: int, source: int, q: int) -> None:
    """col[target] -= q * col[source]."""
    for row in a:
        if row[source]:
            row[target] -= q * row[source]


def _swap_cols(a: list[list[int]], i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]


def _identity_rows(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _hnf_in_place(
    a: list[list[int]], ncols: int, u: list[list[int]] | None = None
) -> list[int]:
    """
    Bring `a` to row Hermite form in place, mirroring every row operation on `u`.

    Returns:
        list[int]: pivot columns, one per nonzero row (rows are packed to the top).
    """
    m = len(a)
    pivot_row = 0
    pivots: list[int] = []
    for col in range(ncols):
        if pivot_row == m:
            break
        found = False
        while True:
            best = None
            for r in range(pivot_row, m):
                v = a[r][col]
                if v and (best is None or abs(v) < abs(a[best][col])):
                    best = r
            if best is None:
                break
            found = True
            if best != pivot_row:
                a[best], a[pivot_row] = a[pivot_row], a[best]
                if u is not None:
                    u[best], u[pivot_row] = u[pivot_row], u[best]
            p = a[pivot_row][col]
            cleared = True
            for r in range(pivot_row + 1, m):
                v = a[r][col]
                if v:
                    q = v // p
                    _row_sub(a, r, pivot_row, q, col)
                    if u is not None:
                        _row_sub(u, r, pivot_row, q)
                    if a[r][col]:
                        cleared = False
            if cleared:
                break
        if not found:
            continue
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
            if u is not None:
                u[pivot_row] = [-x for x in u[pivot_row]]
        p = a[pivot_row][col]
        for r in range(pivot_row):
            q = a[r][col] // p
            if q:
                _row_sub(a, r, pivot_row, q, col)
                if u is not None:
                    _row_sub(u, r, pivot_row, q)
        pivots.append(col)
        pivot_row += 1
    return pivots


def hnf(A: IntMatrix) -> tuple[IntMatrix, IntMatrix]:
    """
    Row Hermite normal form.

    Args:
        A (IntMatrix): any integer matrix

    Returns:
        tuple[IntMatrix, IntMatrix]: (H, U) with U·A = H, U unimodular, H in
        row echelon form with positive pivots and entries above each pivot
        reduced into [0, pivot).
    """
    a = A.to_rows()
    u = _identity_rows(A.rows)
    _hnf_in_place(a, A.cols, u)
    return IntMatrix.from_rows(a, cols=A.cols), IntMatrix.from_rows(u, cols=A.rows)


def _smallest_entry(d: list[list[int]], t: int, m: int, n: int) -> tuple[int, int] | None:
    best = None
    best_abs = 0
    for i in range(t, m):
        row = d[i]
        for j in range(t, n):
            v = row[j]
            if v and (best is None or abs(v) < best_abs):
                best, best_abs = (i, j), abs(v)
    return best


def _smith_in_place(
    d: list[list[int]], m: int, n: int,
    u: list[list[int]] | None = None, v: list[list[int]] | None = None,
) -> tuple[int, ...]:
    """
    Diagonalise `d` in place, mirroring row operations on `u` and column
    operations on `v` when given.

    Returns:
        tuple[int, ...]: the diagonal, of length min(m, n)
    """
    t = 0
    while t < min(m, n):
        pos = _smallest_entry(d, t, m, n)
        if pos is None:
            break
        i, j = pos
        if i != t:
            d[i], d[t] = d[t], d[i]
            if u is not None:
                u[i], u[t] = u[t], u[i]
        if j != t:
            _swap_cols(d, j, t)
            if v is not None:
                _swap_cols(v, j, t)
        while True:
            p = d[t][t]
            cleared = True
            for r in range(t + 1, m):
                if d[r][t]:
                    q = d[r][t] // p
                    _row_sub(d, r, t, q, t)
                    if u is not None:
                        _row_sub(u, r, t, q)
                    if d[r][t]:
                        cleared = False
            for c in range(t + 1, n):
                if d[t][c]:
                    q = d[t][c] // p
                    _col_sub(d, c, t, q)
                    if v is not None:
                        _col_sub(v, c, t, q)
                    if d[t][c]:
                        cleared = False
            if cleared:
                bad = next(
                    (r for r in range(t + 1, m) if any(d[r][c] % p for c in range(t + 1, n))),
                    None,
                )
                if bad is None:
                    break
                _row_sub(d, t, bad, -1, t)
                if u is not None:
                    _row_sub(u, t, bad, -1)
                continue
            # move the smallest entry of row t / column t onto the diagonal
            bi, bj, best_abs = t, t, abs(d[t][t])
            for r in range(t + 1, m):
                if d[r][t] and abs(d[r][t]) < best_abs:
                    bi, bj, best_abs = r, t, abs(d[r][t])
            for c in range(t + 1, n):
                if d[t][c] and abs(d[t][c]) < best_abs:
                    bi, bj, best_abs = t, c, abs(d[t][c])
            if bi != t:
                d[bi], d[t] = d[t], d[bi]
                if u is not None:
                    u[bi], u[t] = u[t], u[bi]
            if bj != t:
                _swap_cols(d, bj, t)
                if v is not None:
                    _swap_cols(v, bj, t)
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        t += 1
    return tuple(d[k][k] for k in range(min(m, n)))


def snf(A: IntMatrix) -> SmithForm:
    """
    Smith normal form with unimodular transforms.

    Args:
        A (IntMatrix): any integer matrix

    Returns:
        SmithForm: U·A·V = D, invariants = diagonal of D (length min(rows, cols)),
        nonnegative and forming a divisibility chain (trailing zeros allowed).
    """
    m, n = A.rows, A.cols
    d = A.to_rows()
    u = _identity_rows(m)
    v = _identity_rows(n)
    invariants = _smith_in_place(d, m, n, u, v)
    return SmithForm(
        D=IntMatrix.from_rows(d, cols=n),
        U=IntMatrix.from_rows(u, cols=m),
        V=IntMatrix.from_rows(v, cols=n),
        invariants=invariants,
    )


def rank(A: IntMatrix) -> int:
    a = A.to_rows()
    return len(_hnf_in_place(a, A.cols))


def det(A: IntMatrix) -> int:
    """Exact determinant (fraction-free, via sympy's DomainMatrix over ZZ)."""
    if A.rows != A.cols:
        raise DimensionError(f"Determinant of non-square {A.rows}x{A.cols} matrix")
    if A.rows == 0:
        return 1
    dm = DomainMatrix([[ZZ(x) for x in A.row(i)] for i in range(A.rows)], (A.rows, A.cols), ZZ)
    return int(dm.det())


def rank_mod(A: IntMatrix, modulus: int) -> int:
    """Rank over the prime field F_modulus."""
    if A.rows == 0 or A.cols == 0:
        return 0
    K = GF(modulus)
    dm = DomainMatrix(
        [[K(x % modulus) for x in A.row(i)] for i in range(A.rows)], (A.rows, A.cols), K
    )
    return int(dm.rank())


def inverse_unimodular(U: IntMatrix) -> IntMatrix:
    """Inverse of a unimodular matrix (its HNF is the identity; the transform is the inverse)."""
    if U.rows != U.cols:
        raise DimensionError("Only square matrices can be unimodular")
    H, W = hnf(U)
    if H != IntMatrix.identity(U.rows):
        raise DimensionError("Matrix is not unimodular")
    return W


def kernel_basis(A: IntMatrix) -> IntMatrix:
    """
    Saturated integer kernel.

    Returns:
        IntMatrix: cols(A) x (cols(A) - rank(A)); its columns are the canonical
        (Hermite-reduced) basis of {x : A·x = 0}.
    """
    a = A.transpose().to_rows()
    u = _identity_rows(A.cols)
    pivots = _hnf_in_place(a, A.rows, u)
    basis = lattice_basis(u[len(pivots):], A.cols)
    return IntMatrix.from_columns(basis, rows=A.cols)


def solve(A: IntMatrix, b: Sequence[int]) -> Vector | None:
    """
    Find an integer x with A·x = b.

    The free coordinates of the HNF back-substitution are set to zero, so the
    answer is deterministic.

    Raises:
        DimensionError: if len(b) != rows(A)
    """
    if len(b) != A.rows:
        raise DimensionError(f"Right-hand side of length {len(b)} for {A.rows} rows")
    # U·A^T = H  =>  A·U^T = H^T; put x = U^T·y and solve H^T·y = b
    h = A.transpose().to_rows()
    u = _identity_rows(A.cols)
    pivots = _hnf_in_place(h, A.rows, u)
    y = [0] * A.cols
    for i, c in enumerate(pivots):
        acc = b[c] - sum(h[k][c] * y[k] for k in range(i) if h[k][c])
        if acc % h[i][c]:
            return None
        y[i] = acc // h[i][c]
    for row_index in range(A.rows):
        if sum(h[k][row_index] * y[k] for k in range(len(pivots)) if h[k][row_index]) != b[row_index]:
            return None
    return tuple(
        sum(u[k][j] * y[k] for k in range(len(pivots)) if y[k]) for j in range(A.cols)
    )


def cokernel_invariants(A: IntMatrix) -> tuple[int, tuple[int, ...]]:
    """
    Structure of Z^rows / (column span of A).

    Returns:
        tuple[int, tuple[int, ...]]: (free_rank, torsion) with torsion factors > 1
        in divisibility order.
    """
    basis = [list(row) for row in lattice_basis(A.columns(), A.rows)]
    diagonal = _smith_in_place(basis, len(basis), A.rows)
    return A.rows - len(basis), tuple(d for d in diagonal if d > 1)


def invariant_factors(orders: Iterable[int]) -> tuple[int, ...]:
    """Normalise a list of cyclic orders to invariant-factor form (dropping 1s)."""
    orders = [abs(o) for o in orders]
    if not orders:
        return ()
    free, torsion = cokernel_invariants(IntMatrix.diagonal(orders))
    return torsion


# ---------------------------------------------------------------------------
# lattices, stored as canonical HNF row bases

def lattice_basis(vectors: Iterable[Sequence[int]], dim: int) -> tuple[Vector, ...]:
    """Canonical basis (nonzero HNF rows) of the lattice spanned by `vectors` in Z^dim."""
    a = [list(v) for v in vectors]
    for v in a:
        if len(v) != dim:
            raise DimensionError(f"Vector of length {len(v)} in a lattice of dimension {dim}")
    if not a:
        return ()
    pivots = _hnf_in_place(a, dim)
    return tuple(tuple(a[i]) for i in range(len(pivots)))


def _pivot(row: Sequence[int]) -> int:
    return next(j for j, x in enumerate(row) if x)


def lattice_coordinates(basis: Sequence[Sequence[int]], v: Sequence[int]) -> Vector | None:
    """Coordinates of v in a Hermite basis, or None when v is outside the lattice."""
    rest = list(v)
    coords = []
    for row in basis:
        c = _pivot(row)
        q, r = divmod(rest[c], row[c])
        if r:
            return None
        coords.append(q)
        if q:
            for k in range(c, len(rest)):
                if row[k]:
                    rest[k] -= q * row[k]
    if any(rest):
        return None
    return tuple(coords)


def in_lattice(basis: Sequence[Sequence[int]], v: Sequence[int]) -> bool:
    return lattice_coordinates(basis, v) is not None


def lattice_index(basis: Sequence[Sequence[int]], dim: int) -> int | None:
    """[Z^dim : L] for a Hermite basis of L, or None when L has lower rank."""
    if len(basis) != dim:
        return None
    index = 1
    for i, row in enumerate(basis):
        index *= row[i]
    return index


def quotient_invariants(
    sub: Sequence[Sequence[int]], ambient: Sequence[Sequence[int]], dim: int
) -> tuple[int, tuple[int, ...]]:
    """
    Structure of ambient / sub for lattices sub ⊆ ambient ⊆ Z^dim.

    Args:
        sub: spanning vectors of the smaller lattice
        ambient: spanning vectors of the larger lattice
        dim: ambient coordinate dimension
    """
    basis = lattice_basis(ambient, dim)
    columns = []
    for v in sub:
        coords = lattice_coordinates(basis, v)
        if coords is None:
            raise DimensionError("Sublattice is not contained in the ambient lattice")
        columns.append(coords)
    return cokernel_invariants(IntMatrix.from_columns(columns, rows=len(basis)))


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank + Z/torsion[0] + ... with torsion in divisibility order."""
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    @classmethod
    def from_pair(cls, pair: tuple[int, Sequence[int]]) -> "AbelianInvariants":
        free, torsion = pair
        return cls(free, invariant_factors(torsion))

    @classmethod
    def of_cokernel(cls, A: IntMatrix) -> "AbelianInvariants":
        return cls.from_pair(cokernel_invariants(A))

    @property
    def is_zero(self) -> bool:
        return not self.free_rank and not self.torsion

    @property
    def order(self) -> int | None:
        """Group order, None when infinite."""
        if self.free_rank:
            return None
        out = 1
        for t in self.torsion:
            out *= t
        return out

    @property
    def exponent(self) -> int | None:
        if self.free_rank:
            return None
        return self.torsion[-1] if self.torsion else 1

    def as_strings(self) -> list[str]:
        """Invariant factors as decimal strings, with "0" for each copy of Z."""
        return [str(t) for t in self.torsion] + ["0"] * self.free_rank

    def __str__(self) -> str:
        parts = [f"Z/{t}" for t in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"
