"""Sparse degree-preserving linear operators on tensor degree components.

An operator on the n-th tensor power is stored column-wise: for each basis word the
image is a sparse word -> coefficient map.  Columns with zero image are
omitted.  Composition, sums and application never densify; compositions
are evaluated column by column, which keeps symmetrizer assembly cheap on
the 3^n-dimensional degree components.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Mapping

from .linalg import SparseMatrix
from .tensors import Tensor, Word, all_words, word_index

Vec = dict[Word, Fraction]


def vec_add_scaled(target: Vec, source: Mapping[Word, Fraction], factor: Fraction) -> None:
    for w, c in source.items():
        nc = target.get(w, 0) + c * factor
        if nc:
            target[w] = nc
        else:
            target.pop(w, None)


class Operator:
    """Column-sparse endomorphism of the degree-``n`` word space."""

    __slots__ = ("degree", "dim", "columns")

    def __init__(self, degree: int, dim: int, columns: dict[Word, Vec]):
        self.degree = degree
        self.dim = dim
        self.columns = columns

    @classmethod
    def identity(cls, degree: int, dim: int) -> "Operator":
        return cls(degree, dim,
                   {w: {w: Fraction(1)} for w in all_words(degree, dim)})

    @classmethod
    def zero(cls, degree: int, dim: int) -> "Operator":
        return cls(degree, dim, {})

    @classmethod
    def from_action(cls, degree: int, dim: int,
                    action: Callable[[Word], Mapping[Word, Fraction]]) -> "Operator":
        columns: dict[Word, Vec] = {}
        for w in all_words(degree, dim):
            img = {u: Fraction(c) for u, c in action(w).items() if c}
            if img:
                columns[w] = img
        return cls(degree, dim, columns)

    def column(self, word: Word) -> Vec:
        return self.columns.get(word, {})

    def apply_vec(self, vec: Mapping[Word, Fraction]) -> Vec:
        out: Vec = {}
        for w, c in vec.items():
            col = self.columns.get(w)
            if col:
                vec_add_scaled(out, col, c)
        return out

    def apply(self, t: Tensor) -> Tensor:
        return Tensor(self.apply_vec(t.terms))

    def compose(self, inner: "Operator") -> "Operator":
        """self after inner (matrix product self @ inner)."""
        if (inner.degree, inner.dim) != (self.degree, self.dim):
            raise ValueError("operator degree/dimension mismatch")
        columns: dict[Word, Vec] = {}
        for w, col in inner.columns.items():
            img = self.apply_vec(col)
            if img:
                columns[w] = img
        return Operator(self.degree, self.dim, columns)

    def __add__(self, other: "Operator") -> "Operator":
        if (other.degree, other.dim) != (self.degree, self.dim):
            raise ValueError("operator degree/dimension mismatch")
        columns = {w: dict(col) for w, col in self.columns.items()}
        for w, col in other.columns.items():
            tgt = columns.setdefault(w, {})
            vec_add_scaled(tgt, col, Fraction(1))
            if not tgt:
                del columns[w]
        return Operator(self.degree, self.dim, columns)

    def scale(self, factor: Fraction | int) -> "Operator":
        factor = Fraction(factor)
        if not factor:
            return Operator.zero(self.degree, self.dim)
        return Operator(self.degree, self.dim,
                        {w: {u: c * factor for u, c in col.items()}
                         for w, col in self.columns.items()})

    def __eq__(self, other) -> bool:
        return (isinstance(other, Operator)
                and self.degree == other.degree
                and self.dim == other.dim
                and self.columns == other.columns)

    def __hash__(self):
        raise TypeError("operators are not hashable")

    def to_matrix(self) -> SparseMatrix:
        """Rows/columns indexed by lexicographic word order."""
        size = self.dim ** self.degree
        rows: dict[int, dict[int, Fraction]] = {}
        for w, col in self.columns.items():
            j = word_index(w, self.dim)
            for u, c in col.items():
                rows.setdefault(word_index(u, self.dim), {})[j] = c
        return SparseMatrix(size, size, rows)

    def __repr__(self) -> str:
        return (f"Operator(degree={self.degree}, dim={self.dim}, "
                f"nonzero_columns={len(self.columns)})")
