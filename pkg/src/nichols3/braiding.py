"""Braided vector spaces of small rank with exact rational coefficients.

A braiding on V = span(x1..xd) is the coefficient tensor r[i,j,k,l] of
c(xi (x) xj) = sum r[i,j,k,l] xk (x) xl.  The module verifies the braid
equation and the quantum Yang-Baxter equation, inverts braidings, builds
the rigidity map, derives the dual exchange map that drives the skew
derivation calculus, and lifts c to the adjacent-pair operators c_j on
degree-n components.  A plain text file format for braidings is provided
for externally supplied examples.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterable, Mapping

from .linalg import SparseMatrix, invert_dense, rank
from .operators import Operator, Vec, vec_add_scaled
from .tensors import Word

CoeffKey = tuple[int, int, int, int]


class BraidingFileError(ValueError):
    """Malformed braiding file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Braiding:
    """Immutable braiding candidate; ``validated`` means the braid equation holds."""

    __slots__ = ("dim", "coeffs", "validated", "_images", "_cache")

    def __init__(self, dim: int, coeffs: Mapping[CoeffKey, Fraction],
                 validate: bool = True):
        self.dim = dim
        clean: dict[CoeffKey, Fraction] = {}
        for (i, j, k, l), v in coeffs.items():
            if not all(1 <= idx <= dim for idx in (i, j, k, l)):
                raise ValueError(f"index {(i, j, k, l)} outside 1..{dim}")
            v = Fraction(v)
            if v:
                clean[(i, j, k, l)] = v
        self.coeffs = clean
        images: dict[tuple[int, int], dict[Word, Fraction]] = {}
        for (i, j, k, l), v in clean.items():
            images.setdefault((i, j), {})[(k, l)] = v
        self._images = images
        self._cache: dict = {}
        if validate:
            defect = braid_defect(self)
            if defect is not None:
                raise ValueError(f"braid equation fails on basis triple {defect}")
            self.validated = True
        else:
            self.validated = check_braid_equation(self)

    @classmethod
    def flip(cls, dim: int) -> "Braiding":
        return cls(dim, {(i, j, j, i): Fraction(1)
                         for i in range(1, dim + 1) for j in range(1, dim + 1)})

    @classmethod
    def diagonal(cls, q: Mapping[tuple[int, int], Fraction], dim: int) -> "Braiding":
        return cls(dim, {(i, j, j, i): Fraction(v) for (i, j), v in q.items()})

    def image(self, i: int, j: int) -> dict[Word, Fraction]:
        """Sparse image of xi (x) xj as a map pair-word -> coefficient."""
        return self._images.get((i, j), {})

    def as_matrix(self) -> SparseMatrix:
        """d^2 x d^2 matrix, rows (k,l) and columns (i,j) in lexicographic order."""
        d = self.dim
        entries = (((k - 1) * d + (l - 1), (i - 1) * d + (j - 1), v)
                   for (i, j, k, l), v in self.coeffs.items())
        return SparseMatrix.from_entries(d * d, d * d, entries)

    def transpose_flip(self) -> "Braiding":
        """Compose with the flip on the left: (tau o c)[i,j,k,l] = c[i,j,l,k]."""
        return Braiding(self.dim,
                        {(i, j, l, k): v for (i, j, k, l), v in self.coeffs.items()},
                        validate=False)

    def conjugate_diagonal(self, scales: Mapping[int, Fraction]) -> "Braiding":
        """Conjugate by the diagonal map xi -> scales[i] * xi (a braided isomorphism)."""
        if any(not scales[i] for i in range(1, self.dim + 1)):
            raise ValueError("diagonal change of basis needs nonzero scales")
        out = {}
        for (i, j, k, l), v in self.coeffs.items():
            out[(i, j, k, l)] = v * scales[k] * scales[l] / (scales[i] * scales[j])
        return Braiding(self.dim, out, validate=False)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Braiding) and self.dim == other.dim
                and self.coeffs == other.coeffs)

    def __repr__(self) -> str:
        return f"Braiding(dim={self.dim}, nonzero={len(self.coeffs)}, validated={self.validated})"


# ---------------------------------------------------------------------------
# braid equation / QYBE


def _apply_pair(c: Braiding, vec: Vec, pos: int) -> Vec:
    """Apply c to tensor legs (pos, pos+1) of every word of a sparse vector."""
    out: Vec = {}
    for w, coeff in vec.items():
        img = c.image(w[pos], w[pos + 1])
        for (k, l), v in img.items():
            nw = w[:pos] + (k, l) + w[pos + 2:]
            nc = out.get(nw, 0) + coeff * v
            if nc:
                out[nw] = nc
            else:
                out.pop(nw, None)
    return out


def _apply_legs13(c: Braiding, vec: Vec) -> Vec:
    out: Vec = {}
    for (i, j, k), coeff in vec.items():
        for (l, m), v in c.image(i, k).items():
            nw = (l, j, m)
            nc = out.get(nw, 0) + coeff * v
            if nc:
                out[nw] = nc
            else:
                out.pop(nw, None)
    return out


def braid_defect(c: Braiding) -> tuple[int, int, int] | None:
    """First basis triple on which the braid equation fails, or None."""
    d = c.dim
    for triple in itertools.product(range(1, d + 1), repeat=3):
        start: Vec = {triple: Fraction(1)}
        lhs = _apply_pair(c, _apply_pair(c, _apply_pair(c, start, 0), 1), 0)
        rhs = _apply_pair(c, _apply_pair(c, _apply_pair(c, start, 1), 0), 1)
        if lhs != rhs:
            return triple
    return None


def check_braid_equation(c: Braiding) -> bool:
    """(c(x)id)(id(x)c)(c(x)id) = (id(x)c)(c(x)id)(id(x)c) on all basis triples."""
    return braid_defect(c) is None


def check_qybe(r_matrix: Braiding) -> bool:
    """R12 R13 R23 = R23 R13 R12 on all basis triples of the cube."""
    c = r_matrix
    d = c.dim
    for triple in itertools.product(range(1, d + 1), repeat=3):
        start: Vec = {triple: Fraction(1)}
        lhs = _apply_pair(c, _apply_legs13(c, _apply_pair(c, start, 1)), 0)
        rhs = _apply_pair(c, _apply_legs13(c, _apply_pair(c, start, 0)), 1)
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# inversion, rigidity, dual exchange


def inverse(c: Braiding) -> Braiding:
    """Braiding with c o inverse(c) = id; raises when c is singular."""
    d = c.dim
    mat = c.as_matrix()
    dense = [[mat.entry(r, col) for col in range(d * d)] for r in range(d * d)]
    inv = invert_dense(dense)
    if inv is None:
        raise ValueError("braiding not invertible")
    coeffs: dict[CoeffKey, Fraction] = {}
    for r in range(d * d):
        k, l = divmod(r, d)
        for col in range(d * d):
            v = inv[r][col]
            if v:
                i, j = divmod(col, d)
                coeffs[(i + 1, j + 1, k + 1, l + 1)] = v
    return Braiding(d, coeffs, validate=False)


def rigidity(c: Braiding) -> tuple[SparseMatrix, bool]:
    """Matrix of the map f(x)v -> (ev (x) id (x) id)(f (x) c(v (x) x_i) (x) f^i).

    Rows are indexed by the output basis x_l (x) f^i, columns by the input
    basis f^j (x) x_v, both lexicographically; the boolean reports bijectivity.
    """
    d = c.dim
    entries = []
    for (v, i, j, l), coeff in c.coeffs.items():
        row = (l - 1) * d + (i - 1)
        col = (j - 1) * d + (v - 1)
        entries.append((row, col, coeff))
    mat = SparseMatrix.from_entries(d * d, d * d, entries)
    return mat, rank(mat) == d * d


class DualExchange:
    """Exchange map E(f^j (x) x_v) = sum e[j,v,b,w] x_b (x) f^w with e[j,v,b,w] = r[v,w,j,b].

    This is the unique exchange coefficient for which the recursive skew
    derivation of a 2-letter word agrees with (f (x) id) o (id + c).
    """

    __slots__ = ("dim", "moves")

    def __init__(self, dim: int, moves: dict[tuple[int, int], tuple[tuple[tuple[int, int], Fraction], ...]]):
        self.dim = dim
        self.moves = moves

    def exchange(self, j: int, v: int) -> tuple[tuple[tuple[int, int], Fraction], ...]:
        """Pairs ((b, w), coefficient) describing E(f^j (x) x_v)."""
        return self.moves.get((j, v), ())


def dual_exchange(c: Braiding) -> DualExchange:
    cached = c._cache.get("dual_exchange")
    if cached is not None:
        return cached
    moves: dict[tuple[int, int], list[tuple[tuple[int, int], Fraction]]] = {}
    for (v, w, j, b), coeff in c.coeffs.items():
        moves.setdefault((j, v), []).append(((b, w), coeff))
    out = DualExchange(c.dim, {k: tuple(sorted(pairs)) for k, pairs in moves.items()})
    c._cache["dual_exchange"] = out
    return out


# ---------------------------------------------------------------------------
# lifts to degree-n components


def apply_lift(c: Braiding, j: int, vec: Mapping[Word, Fraction]) -> Vec:
    """Apply id(x)..(x)c(x)..(x)id with c at positions (j, j+1), 1-based."""
    return _apply_pair(c, dict(vec), j - 1)


def lift(c: Braiding, n: int, j: int) -> Operator:
    """The operator c_j on the degree-n component (letters j, j+1 rewritten)."""
    if not 1 <= j <= n - 1:
        raise ValueError(f"lift position {j} outside 1..{n - 1}")
    key = ("lift", n, j)
    cached = c._cache.get(key)
    if cached is not None:
        return cached
    op = Operator.from_action(n, c.dim,
                              lambda w: _apply_pair(c, {w: Fraction(1)}, j - 1))
    c._cache[key] = op
    return op


# ---------------------------------------------------------------------------
# file format: line 1 "dim d", then "i j k l num/den" per nonzero coefficient


def parse_braiding_text(text: str, validate: bool = False) -> Braiding:
    lines = text.splitlines()
    if not lines:
        raise BraidingFileError(1, "empty file, expected 'dim d' header")
    header = lines[0].split()
    if len(header) != 2 or header[0] != "dim":
        raise BraidingFileError(1, f"expected 'dim d' header, got {lines[0]!r}")
    try:
        dim = int(header[1])
    except ValueError:
        raise BraidingFileError(1, f"bad dimension {header[1]!r}") from None
    if not 1 <= dim <= 9:
        raise BraidingFileError(1, f"dimension {dim} outside 1..9")
    coeffs: dict[CoeffKey, Fraction] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        fields = body.split()
        if len(fields) != 5:
            raise BraidingFileError(lineno, f"expected 'i j k l num/den', got {line!r}")
        try:
            i, j, k, l = (int(f) for f in fields[:4])
            value = Fraction(fields[4])
        except (ValueError, ZeroDivisionError) as exc:
            raise BraidingFileError(lineno, str(exc)) from None
        if not all(1 <= idx <= dim for idx in (i, j, k, l)):
            raise BraidingFileError(lineno, f"index outside 1..{dim}")
        if (i, j, k, l) in coeffs:
            raise BraidingFileError(lineno, f"duplicate entry for {(i, j, k, l)}")
        if value:
            coeffs[(i, j, k, l)] = value
    return Braiding(dim, coeffs, validate=validate)


def read_braiding(path: str, validate: bool = False) -> Braiding:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_braiding_text(handle.read(), validate=validate)


def format_braiding(c: Braiding) -> str:
    lines = [f"dim {c.dim}"]
    for (i, j, k, l), v in sorted(c.coeffs.items()):
        value = str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
        lines.append(f"{i} {j} {k} {l} {value}")
    return "\n".join(lines) + "\n"


def write_braiding(c: Braiding, path: str) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(format_braiding(c))
