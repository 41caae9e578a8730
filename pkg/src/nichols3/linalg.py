"""Exact sparse linear algebra over the rationals.

Matrices are stored row-sparse (dict per row, no zero entries).  All
elimination is done on integer-scaled rows with gcd normalisation after
every update, so no fractions appear until a reduced basis is normalised
at the very end.  Determinants use Bareiss' two-step fraction-free
elimination.  Everything here is deterministic: the reduced row echelon
form of a row space is unique, so canonical bases do not depend on the
pivot heuristic.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Scalar = Fraction

IntRow = dict[int, int]
FracRow = dict[int, Fraction]


# ---------------------------------------------------------------------------
# sparse matrices


@dataclass
class SparseMatrix:
    """Row-sparse rational matrix; ``rows[i][j]`` holds nonzero entries only."""

    nrows: int
    ncols: int
    rows: dict[int, FracRow]

    @classmethod
    def from_entries(cls, nrows: int, ncols: int,
                     entries: Iterable[tuple[int, int, Fraction]]) -> "SparseMatrix":
        rows: dict[int, FracRow] = {}
        for i, j, v in entries:
            if not 0 <= i < nrows or not 0 <= j < ncols:
                raise ValueError(f"entry ({i},{j}) out of bounds for {nrows}x{ncols}")
            v = Fraction(v)
            if v:
                rows.setdefault(i, {})[j] = v
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[Fraction | int]]) -> "SparseMatrix":
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        return cls.from_entries(
            nrows, ncols,
            ((i, j, Fraction(v)) for i, row in enumerate(dense)
             for j, v in enumerate(row) if v))

    @classmethod
    def identity(cls, n: int) -> "SparseMatrix":
        return cls(n, n, {i: {i: Fraction(1)} for i in range(n)})

    def entry(self, i: int, j: int) -> Fraction:
        return self.rows.get(i, {}).get(j, Fraction(0))

    def row_dicts(self) -> list[FracRow]:
        return [dict(r) for r in self.rows.values() if r]


# ---------------------------------------------------------------------------
# integer-row elimination kernels


def _to_int_row(row: Mapping[int, Fraction]) -> IntRow:
    """Scale a rational row to coprime integers (row scaling is rank/kernel safe)."""
    if not row:
        return {}
    denom = 1
    for v in row.values():
        denom = lcm(denom, v.denominator)
    out = {c: int(v * denom) for c, v in row.items() if v}
    g = 0
    for v in out.values():
        g = gcd(g, v)
    if g > 1:
        out = {c: v // g for c, v in out.items()}
    return out


def _reduce_row(row: IntRow, piv: IntRow, col: int) -> None:
    """In place: row := row*m1 - piv*m2 so that row[col] vanishes, gcd-reduced."""
    a = row[col]
    p = piv[col]
    g = gcd(a, p)
    m1, m2 = p // g, a // g
    if m1 != 1:
        for c in row:
            row[c] *= m1
    for c, v in piv.items():
        nv = row.get(c, 0) - v * m2
        if nv:
            row[c] = nv
        else:
            row.pop(c, None)
    g = 0
    for v in row.values():
        g = gcd(g, v)
    if g > 1:
        for c in row:
            row[c] //= g


def _pivot_weight(entry: int, row: IntRow, order: int) -> tuple[int, int, int]:
    # smallest leading entry (by bit length), then sparsest row, then input order
    return (abs(entry).bit_length(), len(row), order)


def _echelon_int(rows: Iterable[IntRow]) -> list[tuple[int, IntRow]]:
    """Forward elimination; returns (pivot column, row) sorted by pivot column."""
    by_lead: dict[int, list[tuple[int, IntRow]]] = {}
    heap: list[int] = []
    for order, r in enumerate(rows):
        if r:
            c = min(r)
            if c not in by_lead:
                heapq.heappush(heap, c)
            by_lead.setdefault(c, []).append((order, r))
    pivots: dict[int, IntRow] = {}
    while heap:
        col = heapq.heappop(heap)
        bucket = by_lead.pop(col, None)
        if not bucket:
            continue
        best = min(bucket, key=lambda t: _pivot_weight(t[1][col], t[1], t[0]))
        piv = best[1]
        pivots[col] = piv
        for order, row in bucket:
            if row is piv:
                continue
            _reduce_row(row, piv, col)
            if row:
                c2 = min(row)
                if c2 not in by_lead:
                    heapq.heappush(heap, c2)
                by_lead.setdefault(c2, []).append((order, row))
    return sorted(pivots.items())


def _rref_int(rows: Iterable[IntRow]) -> list[tuple[int, FracRow]]:
    """Full reduction: unit pivots, zeros above and below, ascending pivots."""
    ech = _echelon_int(rows)
    for idx in range(len(ech) - 1, 0, -1):
        col, piv = ech[idx]
        for _, upper in ech[:idx]:
            if col in upper:
                _reduce_row(upper, piv, col)
    out: list[tuple[int, FracRow]] = []
    for col, row in ech:
        lead = row[col]
        out.append((col, {c: Fraction(v, lead) for c, v in row.items()}))
    return out


def _rref(rows: Iterable[Mapping[int, Fraction]]) -> list[tuple[int, FracRow]]:
    return _rref_int([_to_int_row(r) for r in rows])


# ---------------------------------------------------------------------------
# subspaces (canonical reduced-row-echelon bases)


@dataclass(frozen=True)
class Subspace:
    """Span of the rows of a reduced row echelon basis of a coordinate space.

    Canonical: the RREF of a row space is unique, so two equal subspaces
    compare equal regardless of how their spanning sets were produced.
    """

    ambient: int
    pivots: tuple[int, ...]
    basis: tuple[tuple[tuple[int, Fraction], ...], ...]

    @classmethod
    def from_rows(cls, ambient: int,
                  rows: Iterable[Mapping[int, Fraction]]) -> "Subspace":
        red = _rref(rows)
        for col, _ in red:
            if col >= ambient:
                raise ValueError(f"column {col} outside ambient dimension {ambient}")
        return cls(
            ambient,
            tuple(col for col, _ in red),
            tuple(tuple(sorted(row.items())) for _, row in red))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def basis_rows(self) -> list[FracRow]:
        return [dict(row) for row in self.basis]

    def reduce(self, vector: Mapping[int, Fraction]) -> FracRow:
        """Residual of ``vector`` after eliminating all pivot coordinates."""
        residual = {c: Fraction(v) for c, v in vector.items() if v}
        for pivot, row in zip(self.pivots, self.basis):
            a = residual.get(pivot)
            if not a:
                continue
            for c, v in row:
                nv = residual.get(c, Fraction(0)) - a * v
                if nv:
                    residual[c] = nv
                else:
                    residual.pop(c, None)
        return residual

    def contains(self, vector: Mapping[int, Fraction]) -> bool:
        for c in vector:
            if not 0 <= c < self.ambient:
                raise ValueError(f"coordinate {c} outside ambient dimension {self.ambient}")
        return not self.reduce(vector)


def contains(s: Subspace, vector: Mapping[int, Fraction]) -> bool:
    """Exact membership of a coordinate vector in the span of ``s``."""
    return s.contains(vector)


# ---------------------------------------------------------------------------
# rank / kernel / determinant


def rank(m: SparseMatrix) -> int:
    """Rank over the rationals (hence over any extension field)."""
    return len(_echelon_int([_to_int_row(r) for r in m.rows.values()]))


def row_space(m: SparseMatrix) -> Subspace:
    return Subspace.from_rows(m.ncols, m.rows.values())


def kernel_basis(m: SparseMatrix) -> Subspace:
    """Canonical basis of the right null space ``{v : m v = 0}``."""
    red = _rref(m.rows.values())
    pivot_cols = [col for col, _ in red]
    pivot_set = set(pivot_cols)
    vectors: list[FracRow] = []
    for free in range(m.ncols):
        if free in pivot_set:
            continue
        vec: FracRow = {free: Fraction(1)}
        for col, row in red:
            a = row.get(free)
            if a:
                vec[col] = -a
        vectors.append(vec)
    return Subspace.from_rows(m.ncols, vectors)


def nullity(m: SparseMatrix) -> int:
    return m.ncols - rank(m)


def det_fraction_free(m: SparseMatrix) -> Fraction:
    """Exact determinant via Bareiss elimination (integer intermediates only)."""
    if m.nrows != m.ncols:
        raise ValueError(f"determinant needs a square matrix, got {m.nrows}x{m.ncols}")
    n = m.nrows
    if n == 0:
        return Fraction(1)
    denom = 1
    a: list[list[int]] = []
    for i in range(n):
        row = m.rows.get(i, {})
        scale = 1
        for v in row.values():
            scale = lcm(scale, v.denominator)
        denom *= scale
        a.append([int(row.get(j, Fraction(0)) * scale) for j in range(n)])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], denom)


def invert_dense(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]] | None:
    """Inverse of a small dense matrix, or None when singular."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
