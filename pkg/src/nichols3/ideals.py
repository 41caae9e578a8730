"""Homogeneous two-sided ideals of the free algebra, and the colex word order.

Degree slices of the ideal generated by finitely many homogeneous
elements are built by the recursion  I_n = V I_{n-1} + I_{n-1} V + G_n,
then reduced to a canonical basis.  Quotient Hilbert functions, exact
membership and identity-checking modulo an ideal all reduce to slice
membership.

The colexicographic order compares words from their last letter; when one
word is a suffix of the other the shorter word is smaller.  Mixed-length
comparisons follow that rule, which reproduces the reference chain
1 < a < a^2 < a^3 < ba^2 < ba < aba < b^2a < b < ab < ...
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

from .linalg import Subspace
from .nichols import HilbertData
from .tensors import Tensor, word_index

Letter = Hashable
GenericWord = tuple[Letter, ...]


# ---------------------------------------------------------------------------
# word order


@dataclass(frozen=True)
class WordOrder:
    """Strict total order on letters; extensible with adjoined symbols."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("alphabet letters must be distinct")

    @classmethod
    def natural(cls, dim: int) -> "WordOrder":
        return cls(tuple(range(1, dim + 1)))

    def extend(self, extra: Iterable[Letter]) -> "WordOrder":
        return WordOrder(self.letters + tuple(extra))

    def rank(self, letter: Letter) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise ValueError(f"letter {letter!r} outside the alphabet") from None

    def colex_key(self, word: Sequence[Letter]) -> tuple[int, ...]:
        return tuple(self.rank(letter) for letter in reversed(word))


def colex_compare(u: Sequence[Letter], w: Sequence[Letter], order: WordOrder) -> int:
    """-1, 0 or 1 as u precedes, equals or follows w colexicographically."""
    ku = order.colex_key(u)
    kw = order.colex_key(w)
    if ku == kw:
        return 0
    return -1 if ku < kw else 1


def max_term(x: Tensor | Mapping[GenericWord, Fraction], order: WordOrder) -> GenericWord:
    """Colex-greatest word carrying a nonzero coefficient."""
    terms = x.terms if isinstance(x, Tensor) else x
    words = [w for w, coeff in terms.items() if coeff]
    if not words:
        raise ValueError("the zero element has no maximal term")
    return max(words, key=order.colex_key)


# ---------------------------------------------------------------------------
# generator sets and ideal slices


@dataclass
class GeneratorSet:
    """Homogeneous generators of a two-sided ideal in the free algebra on d letters."""

    generators: list[Tensor]
    dim: int = 3
    _slices: dict[int, Subspace] = field(default_factory=dict, repr=False)
    _by_degree: dict[int, list[Tensor]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        seen: list[Tensor] = []
        for g in self.generators:
            if g.is_zero() or g in seen:
                continue
            if g.degree is None or g.degree < 1:
                raise ValueError("ideal generators must be homogeneous of degree >= 1")
            seen.append(g)
        self.generators = seen
        for g in seen:
            self._by_degree.setdefault(g.degree, []).append(g)

    def degrees(self) -> list[int]:
        return sorted(self._by_degree)

    def slice(self, n: int) -> Subspace:
        """Degree-n component of the ideal, as a canonical subspace of the word space."""
        if n < 0:
            raise ValueError("degree must be >= 0")
        cached = self._slices.get(n)
        if cached is not None:
            return cached
        d = self.dim
        ambient = d ** n
        if n == 0 or (self._by_degree and n < min(self._by_degree)) or not self._by_degree:
            out = Subspace.from_rows(ambient, [])
        else:
            previous = self.slice(n - 1)
            rows: list[dict[int, Fraction]] = []
            lower = d ** (n - 1)
            for row in previous.basis_rows():
                for letter in range(d):
                    # left multiplication by x_{letter+1}: prefix the index block
                    rows.append({letter * lower + idx: v for idx, v in row.items()})
                    # right multiplication: append the letter in base-d position
                    rows.append({idx * d + letter: v for idx, v in row.items()})
            for g in self._by_degree.get(n, ()):
                rows.append(g.coordinates(d))
            out = Subspace.from_rows(ambient, rows)
        self._slices[n] = out
        return out


def ideal_slice(generators: GeneratorSet | Sequence[Tensor], n: int, dim: int = 3) -> Subspace:
    g = generators if isinstance(generators, GeneratorSet) else GeneratorSet(list(generators), dim)
    return g.slice(n)


def quotient_hilbert(generators: GeneratorSet | Sequence[Tensor], max_degree: int,
                     dim: int = 3) -> HilbertData:
    """Graded dimensions of the quotient by the generated two-sided ideal."""
    g = generators if isinstance(generators, GeneratorSet) else GeneratorSet(list(generators), dim)
    ranks = tuple(g.dim ** n - g.slice(n).dim for n in range(max_degree + 1))
    return HilbertData(max_degree, ranks)


def ideal_contains(x: Tensor, generators: GeneratorSet | Sequence[Tensor], dim: int = 3) -> bool:
    """Membership of a homogeneous element in the generated ideal."""
    g = generators if isinstance(generators, GeneratorSet) else GeneratorSet(list(generators), dim)
    if x.is_zero():
        return True
    return g.slice(x.degree).contains(x.coordinates(g.dim))


def check_identity_mod_ideal(lhs: Tensor, rhs: Tensor,
                             generators: GeneratorSet | Sequence[Tensor],
                             dim: int = 3) -> bool:
    """Whether lhs = rhs holds in the quotient by the generated ideal."""
    if not lhs.is_zero() and not rhs.is_zero() and lhs.degree != rhs.degree:
        raise ValueError(f"degree mismatch: {lhs.degree} vs {rhs.degree}")
    return ideal_contains(lhs - rhs, generators, dim)
