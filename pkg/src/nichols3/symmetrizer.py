"""Quantum symmetrizers and shuffle coproduct components.

The degree-n quantum symmetrizer is the sum, over all permutations, of
the braid-group lift of one reduced word per permutation; its kernel is
the degree-n slice of the defining ideal of the Nichols algebra.  Two
constructions are provided: the literal sum over n! reduced words
(``symmetrizer_naive``) and the coset factorisation

    Q_n = (Q_{n-1} (x) id) o (id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1)

(``symmetrizer``), which assembles columns from the cached Q_{n-1}.  The
factors id + c_1 + c_1c_2 + ... and id + c_{n-1} + c_{n-1}c_{n-2} + ...
are the (1, n-1) and (n-1, 1) shuffle coproduct components used by the
skew derivations.

A word [i1, ..., ik] denotes the composition c_{i1} o ... o c_{ik}
(rightmost factor applied first); the same convention is used for reduced
words of permutations in one-line notation.
"""

from __future__ import annotations

import itertools
import warnings
from fractions import Fraction
from typing import Sequence

from .braiding import Braiding, apply_lift, lift
from .operators import Operator, Vec, vec_add_scaled
from .tensors import Word

# Q_7 acts on 3^7 = 2187 dimensions; anything larger is out of desk range.
HARD_DEGREE_LIMIT = 7


def _check_degree(n: int) -> None:
    if n > HARD_DEGREE_LIMIT:
        raise ValueError(f"degree {n} beyond hard limit {HARD_DEGREE_LIMIT}")
    if n == HARD_DEGREE_LIMIT:
        warnings.warn(f"degree {n} symmetrizer is expensive (3^{n} dimensions)",
                      RuntimeWarning, stacklevel=3)


def _require_validated(c: Braiding) -> None:
    if not c.validated:
        raise ValueError("braiding does not satisfy the braid equation")


# ---------------------------------------------------------------------------
# permutations and reduced words


def inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def reduced_word(perm: Sequence[int]) -> list[int]:
    """Canonical reduced word via insertion sort.

    The largest displaced value is bubbled right to its home position,
    repeatedly; every swap removes exactly one inversion, so the word
    length equals the inversion count.  Returned indices i denote the
    adjacent transposition of positions (i, i+1), 1-based, composed
    rightmost-first.
    """
    p = list(perm)
    n = len(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"{perm!r} is not a permutation in one-line notation")
    word: list[int] = []
    for target in range(n, 0, -1):
        pos = p.index(target)
        for j in range(pos, target - 1):
            p[j], p[j + 1] = p[j + 1], p[j]
            word.append(j + 1)
    word.reverse()
    return word


def lift_word(c: Braiding, n: int, word: Sequence[int]) -> Operator:
    """Compose lifted adjacent braidings c_{i1} o ... o c_{ik}."""
    op = Operator.identity(n, c.dim)
    for j in reversed(word):
        op = _compose_lift_left(c, j, op)
    return op


def _compose_lift_left(c: Braiding, j: int, op: Operator) -> Operator:
    columns: dict[Word, Vec] = {}
    for w, col in op.columns.items():
        img = apply_lift(c, j, col)
        if img:
            columns[w] = img
    return Operator(op.degree, op.dim, columns)


# ---------------------------------------------------------------------------
# symmetrizers


def symmetrizer_naive(c: Braiding, n: int) -> Operator:
    """Sum of the lifts of one reduced word per permutation (the raw definition)."""
    _require_validated(c)
    _check_degree(n)
    if n < 1:
        raise ValueError("symmetrizer degree must be >= 1")
    total = Operator.zero(n, c.dim)
    for perm in itertools.permutations(range(1, n + 1)):
        total = total + lift_word(c, n, reduced_word(perm))
    return total


def delta_right(c: Braiding, n: int) -> Operator:
    """Shuffle component id + c_{n-1} + c_{n-1}c_{n-2} + ... + c_{n-1}...c_1."""
    _require_validated(c)
    if n < 2:
        raise ValueError("shuffle components need degree >= 2")
    _check_degree(n)
    total = Operator.identity(n, c.dim)
    chain = Operator.identity(n, c.dim)
    for i in range(n - 1, 0, -1):
        # chain becomes c_{n-1} ... c_i; build up by right-composition with c_i
        chain = chain.compose(lift(c, n, i))
        total = total + chain
    return total


def delta_left(c: Braiding, n: int) -> Operator:
    """Shuffle component id + c_1 + c_1c_2 + ... + c_1...c_{n-1}."""
    _require_validated(c)
    if n < 2:
        raise ValueError("shuffle components need degree >= 2")
    _check_degree(n)
    total = Operator.identity(n, c.dim)
    chain = Operator.identity(n, c.dim)
    for i in range(1, n):
        chain = chain.compose(lift(c, n, i))
        total = total + chain
    return total


def symmetrizer(c: Braiding, n: int) -> Operator:
    """Q_n via the coset factorisation; equals symmetrizer_naive exactly."""
    _require_validated(c)
    _check_degree(n)
    if n < 1:
        raise ValueError("symmetrizer degree must be >= 1")
    cached = c._cache.get(("Q", n))
    if cached is not None:
        return cached
    if n == 1:
        op = Operator.identity(1, c.dim)
    else:
        previous = symmetrizer(c, n - 1)
        delta = delta_right(c, n)
        columns: dict[Word, Vec] = {}
        for w, col in delta.columns.items():
            img: Vec = {}
            for u, coeff in col.items():
                # (Q_{n-1} (x) id) applied to the basis word u
                for v, q in previous.column(u[:-1]).items():
                    nw = v + (u[-1],)
                    nc = img.get(nw, 0) + q * coeff
                    if nc:
                        img[nw] = nc
                    else:
                        img.pop(nw, None)
            if img:
                columns[w] = img
        op = Operator(n, c.dim, columns)
    c._cache[("Q", n)] = op
    return op


def apply_symmetrizer(c: Braiding, n: int, vec: Vec, matrix_cap: int = 5) -> Vec:
    """Q_n applied to one vector without materialising Q_n above ``matrix_cap``.

    Recurses through Q_n = (Q_{n-1} (x) id) o Delta_{n-1,1}; once the degree
    drops to ``matrix_cap`` the cached column form is used directly.
    """
    _require_validated(c)
    _check_degree(n)
    if not vec:
        return {}
    if n <= matrix_cap:
        return symmetrizer(c, n).apply_vec(vec)
    # Delta_{n-1,1}(vec) = sum over chains c_{n-1}...c_i, the empty chain included
    spread: Vec = dict(vec)
    for i in range(n - 1, 0, -1):
        chain = dict(vec)
        for j in range(i, n):
            chain = apply_lift(c, j, chain)
        vec_add_scaled(spread, chain, Fraction(1))
    by_last: dict[int, Vec] = {}
    for w, coeff in spread.items():
        by_last.setdefault(w[-1], {})[w[:-1]] = coeff
    out: Vec = {}
    for last, sub in by_last.items():
        image = apply_symmetrizer(c, n - 1, sub, matrix_cap)
        for u, coeff in image.items():
            w = u + (last,)
            nc = out.get(w, 0) + coeff
            if nc:
                out[w] = nc
            else:
                out.pop(w, None)
    return out
