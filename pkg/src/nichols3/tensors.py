"""Homogeneous elements of the tensor algebra on basis letters x1..xd.

A word is a tuple of letters in ``1..d``; an element is a sparse map
word -> rational coefficient, with every stored word of the same length.
Multiplication is concatenation.  The module also fixes the word/index
correspondence used by the matrix layer and a small text grammar
(``x3*x1 - x1*x3 + 1/2*x1*x1``) for reading and printing elements.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

Word = tuple[int, ...]


def word_index(word: Word, dim: int) -> int:
    """Position of a word in the lexicographic basis of words of its length."""
    idx = 0
    for letter in word:
        idx = idx * dim + (letter - 1)
    return idx


def index_word(idx: int, degree: int, dim: int) -> Word:
    letters = []
    for _ in range(degree):
        idx, r = divmod(idx, dim)
        letters.append(r + 1)
    return tuple(reversed(letters))


def all_words(degree: int, dim: int) -> list[Word]:
    return [index_word(i, degree, dim) for i in range(dim ** degree)]


class Tensor:
    """Sparse homogeneous tensor; treat instances as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Word, Fraction] | None = None):
        clean: dict[Word, Fraction] = {}
        degree = None
        for word, coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            if degree is None:
                degree = len(word)
            elif len(word) != degree:
                raise ValueError("tensor terms must share one degree")
            clean[tuple(word)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls) -> "Tensor":
        return cls({})

    @classmethod
    def word(cls, letters: Iterable[int], coeff: Fraction | int = 1) -> "Tensor":
        return cls({tuple(letters): Fraction(coeff)})

    @classmethod
    def letter(cls, i: int) -> "Tensor":
        return cls({(i,): Fraction(1)})

    @property
    def degree(self) -> int | None:
        """Common word length, or None for the zero element."""
        for word in self.terms:
            return len(word)
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, word: Word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def coordinates(self, dim: int) -> dict[int, Fraction]:
        return {word_index(w, dim): c for w, c in self.terms.items()}

    @classmethod
    def from_coordinates(cls, coords: Mapping[int, Fraction],
                         degree: int, dim: int) -> "Tensor":
        return cls({index_word(i, degree, dim): c for i, c in coords.items()})

    def __add__(self, other: "Tensor") -> "Tensor":
        out = dict(self.terms)
        for w, c in other.terms.items():
            nc = out.get(w, Fraction(0)) + c
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
        return Tensor(out)

    def __sub__(self, other: "Tensor") -> "Tensor":
        return self + (-other)

    def __neg__(self) -> "Tensor":
        return Tensor({w: -c for w, c in self.terms.items()})

    def scale(self, factor: Fraction | int) -> "Tensor":
        factor = Fraction(factor)
        if not factor:
            return Tensor.zero()
        return Tensor({w: c * factor for w, c in self.terms.items()})

    def __rmul__(self, factor):
        if isinstance(factor, (int, Fraction)):
            return self.scale(factor)
        return NotImplemented

    def __mul__(self, other):
        """Concatenation product; also accepts a scalar on the right."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                nc = out.get(w, Fraction(0)) + c1 * c2
                if nc:
                    out[w] = nc
                else:
                    out.pop(w, None)
        return Tensor(out)

    def __pow__(self, n: int) -> "Tensor":
        if n < 0:
            raise ValueError("negative powers are not defined in T(V)")
        result = Tensor({(): Fraction(1)})
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        return isinstance(other, Tensor) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"Tensor({format_element(self)!r})"


# ---------------------------------------------------------------------------
# text grammar


_TOKEN = re.compile(r"\s*(?:(?P<sign>[+-])|(?P<coeff>\d+(?:/\d+)?)|(?P<letter>x[1-9])|(?P<star>\*))")


def parse_element(text: str, dim: int = 3) -> Tensor:
    """Parse ``x3*x1 - x1*x3 + 1/2*x1*x1`` style input into a Tensor."""
    pos = 0
    n = len(text)
    terms: dict[Word, Fraction] = {}

    def fail(msg: str):
        raise ValueError(f"parse error at position {pos}: {msg}")

    def next_token():
        nonlocal pos
        if pos >= n:
            return None, None
        m = _TOKEN.match(text, pos)
        if not m or not m.group().strip():
            if text[pos:].strip():
                fail(f"unexpected input {text[pos:pos + 10]!r}")
            pos = n
            return None, None
        pos = m.end()
        for kind in ("sign", "coeff", "letter", "star"):
            if m.group(kind):
                return kind, m.group(kind)
        return None, None

    tokens = []
    while True:
        kind, value = next_token()
        if kind is None:
            break
        tokens.append((kind, value))

    if text.strip() in ("", "0"):
        return Tensor.zero()

    i = 0
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "sign":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        coeff = Fraction(1)
        factors: list[int] = []
        expect_factor = True
        saw_coeff = False
        while i < len(tokens) and tokens[i][0] != "sign":
            kind, value = tokens[i]
            if kind == "coeff":
                if saw_coeff or factors:
                    raise ValueError(f"coefficient must lead its term (term near {value!r})")
                coeff = Fraction(value)
                saw_coeff = True
                expect_factor = False
            elif kind == "letter":
                letter = int(value[1])
                if letter > dim:
                    raise ValueError(f"letter {value} outside alphabet x1..x{dim}")
                factors.append(letter)
                expect_factor = False
            elif kind == "star":
                if expect_factor:
                    raise ValueError("misplaced '*'")
                expect_factor = True
            i += 1
        if expect_factor and (saw_coeff or factors):
            raise ValueError("dangling '*' at end of term")
        if not factors and not saw_coeff:
            raise ValueError("empty term")
        word = tuple(factors)
        nc = terms.get(word, Fraction(0)) + sign * coeff
        if nc:
            terms[word] = nc
        else:
            terms.pop(word, None)
    return Tensor(terms)


def _format_term(word: Word, coeff: Fraction) -> str:
    body = "*".join(f"x{letter}" for letter in word)
    mag = abs(coeff)
    if mag == 1 and word:
        return body
    if not word:
        return str(mag)
    return f"{mag}*{body}"


def format_element(t: Tensor) -> str:
    if t.is_zero():
        return "0"
    items = sorted(t.terms.items())
    parts = []
    for idx, (word, coeff) in enumerate(items):
        piece = _format_term(word, coeff)
        if idx == 0:
            parts.append(piece if coeff > 0 else f"-{piece}")
        else:
            parts.append(f"+ {piece}" if coeff > 0 else f"- {piece}")
    return " ".join(parts)
