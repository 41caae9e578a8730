"""Relation discovery and graded invariants of the Nichols algebra of (V, c).

Degree-n relations form the kernel of the degree-n quantum symmetrizer;
graded dimensions are its ranks.  Skew derivations give an independent
second route to the same kernels: x is a degree-n relation exactly when
every left derivation of x is a degree-(n-1) relation.  Keeping both
routes live is deliberate; they cross-check the 81 transcribed braiding
coefficients of every catalog family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .braiding import Braiding, apply_lift, dual_exchange, lift
from .linalg import SparseMatrix, Subspace, kernel_basis, rank
from .operators import Operator, Vec, vec_add_scaled
from .symmetrizer import apply_symmetrizer, symmetrizer
from .tensors import Tensor, Word, all_words, word_index

DEFAULT_DEGREE_CAP = 5


class DegreeCapError(ValueError):
    """Requested degree exceeds the configured cap."""


def _check_cap(n: int, cap: int) -> None:
    if n > cap:
        raise DegreeCapError(f"degree {n} exceeds cap {cap}; raise the cap explicitly")


@dataclass(frozen=True)
class RelationSet:
    """Kernel slice of the degree-n symmetrizer, as a canonical subspace."""

    degree: int
    dim: int
    kernel: Subspace

    @property
    def dimension(self) -> int:
        return self.kernel.dim

    def tensors(self) -> list[Tensor]:
        return [Tensor.from_coordinates(dict(row), self.degree, self.dim)
                for row in self.kernel.basis_rows()]

    def contains(self, x: Tensor) -> bool:
        if x.is_zero():
            return True
        if x.degree != self.degree:
            raise ValueError(f"degree {x.degree} element tested in degree {self.degree}")
        return self.kernel.contains(x.coordinates(self.dim))


@dataclass(frozen=True)
class HilbertData:
    """Graded dimensions rank Q_0 .. rank Q_N of the Nichols algebra."""

    max_degree: int
    ranks: tuple[int, ...]

    def total(self) -> int:
        return sum(self.ranks)


# ---------------------------------------------------------------------------
# kernels of symmetrizers


def quadratic_relations(c: Braiding) -> RelationSet:
    """Kernel of id + c on V (x) V: the quadratic part of the defining ideal."""
    op = Operator.identity(2, c.dim) + lift(c, 2, 1)
    return RelationSet(2, c.dim, kernel_basis(op.to_matrix()))


def relations_at_degree(c: Braiding, n: int,
                        cap: int = DEFAULT_DEGREE_CAP) -> RelationSet:
    """Canonical basis of the degree-n relation space ker Q_n."""
    if n < 2:
        raise ValueError("relations live in degree >= 2")
    _check_cap(n, cap)
    cached = c._cache.get(("kerQ", n))
    if cached is None:
        cached = RelationSet(n, c.dim, kernel_basis(symmetrizer(c, n).to_matrix()))
        c._cache[("kerQ", n)] = cached
    return cached


def symmetrizer_rank(c: Braiding, n: int) -> int:
    if n == 0:
        return 1
    if n == 1:
        return c.dim
    cached = c._cache.get(("rankQ", n))
    if cached is None:
        kernel = c._cache.get(("kerQ", n))
        if kernel is not None:
            cached = c.dim ** n - kernel.dimension
        else:
            cached = rank(symmetrizer(c, n).to_matrix())
        c._cache[("rankQ", n)] = cached
    return cached


def hilbert(c: Braiding, max_degree: int,
            cap: int = DEFAULT_DEGREE_CAP) -> HilbertData:
    """Graded dimensions (1, d, rank Q_2, ..., rank Q_N)."""
    _check_cap(max_degree, cap)
    return HilbertData(max_degree,
                       tuple(symmetrizer_rank(c, n) for n in range(max_degree + 1)))


def is_relation(c: Braiding, x: Tensor, cap: int = DEFAULT_DEGREE_CAP) -> bool:
    """Exact test Q_deg(x) = 0, applied without materialising large symmetrizers."""
    if x.is_zero():
        return True
    n = x.degree
    if n is None or n < 1:
        return False
    if n == 1:
        return x.is_zero()
    _check_cap(n, cap)
    return not apply_symmetrizer(c, n, dict(x.terms))


# ---------------------------------------------------------------------------
# skew derivations


def derive_left(c: Braiding, i: int, x: Tensor) -> Tensor:
    """Left skew derivation attached to the coordinate functional f^i.

    Computed by the recursion d(x_v w) = delta_{iv} w + sum E-moves, seeded
    with d(x_v) = f^i(x_v); E is the dual exchange map of the braiding.
    """
    return Tensor(_derive_left_vec(c, i, x.terms))


def _derive_left_vec(c: Braiding, i: int, terms) -> Vec:
    if not terms:
        return {}
    degree = len(next(iter(terms)))
    if degree < 1:
        raise ValueError("derivations need degree >= 1")
    exchange = dual_exchange(c)
    memo = c._cache.setdefault("derive_memo", {})

    def rec(j: int, word: Word) -> Vec:
        if not word:
            return {}
        key = (j, word)
        hit = memo.get(key)
        if hit is not None:
            return hit
        head, rest = word[0], word[1:]
        out: Vec = {}
        if j == head:
            out[rest] = Fraction(1)
        if rest:
            for (b, w), coeff in exchange.exchange(j, head):
                sub = rec(w, rest)
                if sub:
                    for u, cu in sub.items():
                        nw = (b,) + u
                        nc = out.get(nw, 0) + coeff * cu
                        if nc:
                            out[nw] = nc
                        else:
                            out.pop(nw, None)
        memo[key] = out
        return out

    result: Vec = {}
    for word, coeff in terms.items():
        vec_add_scaled(result, rec(i, word), coeff)
    return result


def _apply_delta_left_vec(c: Braiding, vec: Vec) -> Vec:
    """Delta_{1,n-1} = id + c_1 + c_1c_2 + ... applied to one vector."""
    degree = len(next(iter(vec)))
    total: Vec = dict(vec)
    for i in range(2, degree + 1):
        chain = dict(vec)
        for j in range(i - 1, 0, -1):
            chain = apply_lift(c, j, chain)
        vec_add_scaled(total, chain, Fraction(1))
    return total


def derive_left_shuffle(c: Braiding, i: int, x: Tensor) -> Tensor:
    """Oracle form of derive_left: contract the first leg of Delta_{1,n-1}(x)."""
    if x.is_zero():
        return Tensor.zero()
    spread = _apply_delta_left_vec(c, x.terms)
    out: Vec = {}
    for w, coeff in spread.items():
        if w[0] == i:
            nc = out.get(w[1:], 0) + coeff
            if nc:
                out[w[1:]] = nc
            else:
                out.pop(w[1:], None)
    return Tensor(out)


def derive_right(c: Braiding, i: int, x: Tensor) -> Tensor:
    """Right-handed partner: contract the last leg of Delta_{n-1,1}(x)."""
    if x.is_zero():
        return Tensor.zero()
    degree = x.degree
    if degree is None or degree < 1:
        raise ValueError("derivations need degree >= 1")
    total: Vec = dict(x.terms)
    for pos in range(degree - 1, 0, -1):
        chain = dict(x.terms)
        for j in range(pos, degree):
            chain = apply_lift(c, j, chain)
        vec_add_scaled(total, chain, Fraction(1))
    out: Vec = {}
    for w, coeff in total.items():
        if w[-1] == i:
            nc = out.get(w[:-1], 0) + coeff
            if nc:
                out[w[:-1]] = nc
            else:
                out.pop(w[:-1], None)
    return Tensor(out)


def kernel_via_derivations(c: Braiding, n: int,
                           cap: int = DEFAULT_DEGREE_CAP) -> RelationSet:
    """Second route to ker Q_n: the x with every left derivation in ker Q_{n-1}.

    The conditions 'derivation of x reduces to zero against the lower
    kernel' are stacked into one elimination; the result coincides with
    relations_at_degree because Q_n factors through the shuffle component.
    """
    if n < 2:
        raise ValueError("relations live in degree >= 2")
    _check_cap(n, cap)
    d = c.dim
    lower: Subspace | None
    if n == 2:
        lower = None  # ker Q_1 = 0: the conditions read 'derivation = 0'
    else:
        lower = relations_at_degree(c, n - 1, cap).kernel
    columns = d ** n
    rows: dict[int, dict[int, Fraction]] = {}
    for col, word in enumerate(all_words(n, d)):
        for i in range(1, d + 1):
            derived = _derive_left_vec(c, i, {word: Fraction(1)})
            coords = {word_index(w, d): v for w, v in derived.items()}
            residual = lower.reduce(coords) if lower is not None else coords
            base = (i - 1) * d ** (n - 1)
            for r, v in residual.items():
                rows.setdefault(base + r, {})[col] = v
    matrix = SparseMatrix(d * d ** (n - 1), columns, rows)
    return RelationSet(n, d, kernel_basis(matrix))
