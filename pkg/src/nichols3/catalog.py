"""The ten validated rank-3 braiding families and their expected outcomes.

Each family is stored as its published 9x9 coefficient array.  Columns of
the array enumerate the input pair (i, j) in the order
(1,1),(2,1),(3,1),(1,2),...,(3,3) and rows the output pair (k, l)
lexicographically, so the braiding coefficient r[i,j,k,l] sits at
row 3(k-1)+l, column 3(j-1)+i.  Construction always re-checks the braid
equation: a failing check means a transcription error, never a runtime
condition.

Alongside the constructors, every analysed parameter regime is catalogued
as a row: its constraints, the generators of the defining ideal, a basis
descriptor whose degree counts give the expected Hilbert function, and
the expected dimension or growth.  Dotted entries of the source arrays
are zeros; the R1.10 array carries a global factor t.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Callable, Mapping, Sequence

from . import r12
from .braiding import Braiding
from .tensors import Tensor

F = Fraction
_X1 = Tensor.letter(1)
_X2 = Tensor.letter(2)
_X3 = Tensor.letter(3)

FAMILY_NAMES = tuple(f"R1.{j}" for j in range(1, 11))


class CatalogError(ValueError):
    pass


class UnknownFamilyError(CatalogError):
    pass


class ConstraintError(CatalogError):
    pass


class TranscriptionError(CatalogError):
    """The transcribed array failed the braid equation; fatal."""


# ---------------------------------------------------------------------------
# coefficient arrays


def _grid_r11(P):
    t, a, b, p = P["t"], P["a"], P["b"], P["p"]
    return [
        [t, 0, t * a, 0, 0, 0, -t * a, 0, -t * a * b],
        [0, t, 0, 0, 0, t * (a - b), 0, -t * a, t * p],
        [0, 0, t, 0, 0, 0, 0, 0, -t * b],
        [0, 0, 0, t, 0, t * a, 0, t * (b - a), -t * p],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, 0, t * b],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r12(P):
    t, a, b, p, q, k = P["t"], P["a"], P["b"], P["p"], P["q"], P["k"]
    return [
        [t, 0, t * b, 0, 0, 0, t * p, 0, t * a],
        [0, t, 0, 0, 0, t * (p - q), 0, t * q, t * k],
        [0, 0, t, 0, 0, 0, 0, 0, t * p],
        [0, 0, 0, t, 0, t * b, 0, 0, -t * k],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, 0, t * b],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r13(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    return [
        [t, 0, t * a, 0, 0, 0, -t * a, 0, -t * a * b],
        [0, t, 0, 0, 0, 0, 0, -t * b, -t * p],
        [0, 0, t, 0, 0, 0, 0, 0, -t * b],
        [0, 0, 0, t, 0, t * b, 0, 0, t * p],
        [0, 0, 0, 0, t, 0, 0, 0, t * q],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, 0, t * b],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r14(P):
    t, a, b, p = P["t"], P["a"], P["b"], P["p"]
    return [
        [t, 0, t * a, 0, 0, 0, -t * a, 0, -t * a * b],
        [0, t, 0, 0, 0, 0, 0, t * (a - 2 * b), t * p],
        [0, 0, t, 0, 0, 0, 0, 0, -t * b],
        [0, 0, 0, t, 0, t * (2 * b - a), 0, 0, 0],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, 0, t * b],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r15(P):
    t, a, b, p, q, k, l = P["t"], P["a"], P["b"], P["p"], P["q"], P["k"], P["l"]
    return [
        [t, t * l, 0, -t * l, -t * l * l, t * (l * q - k), t * p, t * k, t * a],
        [0, t, 0, 0, -t * l, 0, 0, t * q, t * b],
        [0, 0, t, 0, 0, -t * l, 0, 0, t * p],
        [0, 0, 0, t, t * l, 0, 0, t * (p - q), -t * b],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, t * l, 0],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r16(P):
    t, a, b, p, q, k = P["t"], P["a"], P["b"], P["p"], P["q"], P["k"]
    return [
        [t, t * a, t * p, -t * a, -t * a * b, -t * (2 * p * a + k), -t * p, t * k, -t * p * q],
        [0, t, 0, 0, -t * b, 0, 0, -t * p, 0],
        [0, 0, t, 0, 0, -t * a, 0, 0, -t * q],
        [0, 0, 0, t, t * b, t * p, 0, 0, 0],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, t * a, t * q],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r17(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    k, l, d = P["k"], P["l"], P["d"]
    return [
        [t, t * k, t * p, -t * k, -t * k * l, t * d, t * a, t * (k * (a - q) - d), t * b],
        [0, t, 0, 0, -t * l, t * (p - q), 0, t * a, 0],
        [0, 0, t, 0, 0, -t * k, 0, 0, t * a],
        [0, 0, 0, t, t * l, t * q, 0, 0, 0],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, t * k, t * p],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r18(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    return [
        [t, t * a, t * q, -t * a, -t * a * a, -t * b, -t * q, t * b, t * a * p],
        [0, t, 0, 0, -t * a, t * q, 0, 0, t * p],
        [0, 0, t, 0, 0, -t * a, 0, 0, 0],
        [0, 0, 0, t, t * a, 0, 0, -t * q, -t * p],
        [0, 0, 0, 0, t, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, t, 0, 0, 0],
        [0, 0, 0, 0, 0, 0, t, t * a, 0],
        [0, 0, 0, 0, 0, 0, 0, t, 0],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r19(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    return [
        [t, t, 0, -t, -t, t * a, t * b, t * (b - a), t * p],
        [0, t, t, 0, -t, -t, 0, t * b, t * (b - q)],
        [0, 0, t, 0, 0, -t, 0, 0, t * b],
        [0, 0, 0, t, t, 0, -t, -t, t * q],
        [0, 0, 0, 0, t, t, 0, -t, -t],
        [0, 0, 0, 0, 0, t, 0, 0, -t],
        [0, 0, 0, 0, 0, 0, t, t, 0],
        [0, 0, 0, 0, 0, 0, 0, t, t],
        [0, 0, 0, 0, 0, 0, 0, 0, t],
    ]


def _grid_r110(P):
    t, a = P["t"], P["a"]
    # The (1,1) slot of the (3,3) block needs the a^2 factor: with -4a(a+7)
    # the braid equation fails identically, with residual 32a(a-1)^2(a+7),
    # except at a in {-7, 0, 1}; -4a^2(a+7) is the unique single-entry fix.
    base = [
        [1, 2, 0, -2, -4 * a, 8 * a, 4, 0, -4 * a * a * (a + 7)],
        [0, 1, 2, 0, -2 * a, 4 - 6 * a - 2 * a * a, 0, 2 * a * (a + 1), 6 * a * (a + 2) * (a - 1)],
        [0, 0, 1, 0, 0, 2 - 4 * a, 0, 0, -4 * a * (1 - 2 * a)],
        [0, 0, 0, 1, 2 * a, -2 * a * (1 - a), -2, -2 * a * (a + 1), -2 * a * (1 + 3 * a) * (a - 2)],
        [0, 0, 0, 0, 1, 2 * a, 0, -2 * a, 4 * a * (1 - 2 * a)],
        [0, 0, 0, 0, 0, 1, 0, 0, 2 - 4 * a],
        [0, 0, 0, 0, 0, 0, 1, 4 * a - 2, 4 * (1 - 2 * a) * (1 - a)],
        [0, 0, 0, 0, 0, 0, 0, 1, 4 * a - 2],
        [0, 0, 0, 0, 0, 0, 0, 0, 1],
    ]
    return [[t * v for v in row] for row in base]


_GRIDS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "R1.1": (_grid_r11, ("t", "a", "b", "p")),
    "R1.2": (_grid_r12, ("t", "a", "b", "p", "q", "k")),
    "R1.3": (_grid_r13, ("t", "a", "b", "p", "q")),
    "R1.4": (_grid_r14, ("t", "a", "b", "p")),
    "R1.5": (_grid_r15, ("t", "a", "b", "p", "q", "k", "l")),
    "R1.6": (_grid_r16, ("t", "a", "b", "p", "q", "k")),
    "R1.7": (_grid_r17, ("t", "a", "b", "p", "q", "k", "l", "d")),
    "R1.8": (_grid_r18, ("t", "a", "b", "p", "q")),
    "R1.9": (_grid_r19, ("t", "a", "b", "p", "q")),
    "R1.10": (_grid_r110, ("t", "a")),
}


def family_parameters(family: str) -> tuple[str, ...]:
    if family not in _GRIDS:
        raise UnknownFamilyError(f"unknown family {family!r}; expected one of {', '.join(FAMILY_NAMES)}")
    return _GRIDS[family][1]


def normalize_params(family: str, params: Mapping[str, object]) -> dict[str, Fraction]:
    names = family_parameters(family)
    out: dict[str, Fraction] = {}
    for key, value in params.items():
        if key not in names:
            raise ConstraintError(f"{family} has no parameter {key!r} (expects {', '.join(names)})")
        out[key] = Fraction(value)
    missing = [n for n in names if n not in out]
    if missing:
        raise ConstraintError(f"{family} is missing parameter(s) {', '.join(missing)}")
    return out


def build(family: str, params: Mapping[str, object]) -> Braiding:
    """Construct and validate the braiding of a catalog family.

    The homogenisation parameter t must be nonzero; a braid-equation
    failure is raised as TranscriptionError because it can only come from
    a mis-typed coefficient array.
    """
    values = normalize_params(family, params)
    if values["t"] == 0:
        raise ConstraintError("constraint t != 0 violated")
    grid = _GRIDS[family][0](values)
    coeffs = {}
    for i in range(1, 4):
        for j in range(1, 4):
            col = 3 * (j - 1) + (i - 1)
            for k in range(1, 4):
                for l in range(1, 4):
                    v = grid[3 * (k - 1) + (l - 1)][col]
                    if v:
                        coeffs[(i, j, k, l)] = Fraction(v)
    try:
        return Braiding(3, coeffs, validate=True)
    except ValueError as exc:
        raise TranscriptionError(f"{family}: {exc}") from exc


# ---------------------------------------------------------------------------
# basis descriptors and their degree counts


@dataclass(frozen=True)
class BasisDescriptor:
    """Monomial basis shape; counting uses deg z_k = k+1 and deg x31 = 2."""

    kind: str                 # B0, B1, B3, Binf, BN3, Btilde_inf, BtildeN
    chain_top: int | None = None   # N for BN3 / BtildeN

    def label(self) -> str:
        if self.kind == "BN3":
            return f"B{self.chain_top + 3}"
        if self.kind == "BtildeN":
            return f"Btilde{(self.chain_top + 5) // 2}"
        return self.kind


def _series_mul(a: list[int], b: list[int], upto: int) -> list[int]:
    out = [0] * (upto + 1)
    for i, ai in enumerate(a[:upto + 1]):
        if not ai:
            continue
        for j, bj in enumerate(b[:upto + 1 - i]):
            out[i + j] += ai * bj
    return out


def _geometric(step: int, upto: int) -> list[int]:
    # coefficients of 1/(1 - s^step)
    return [1 if i % step == 0 else 0 for i in range(upto + 1)]


def _pbw_series(b: BasisDescriptor, upto: int) -> list[int]:
    one = [1] + [0] * upto
    if b.kind == "B0":
        series = one
        for _ in range(3):
            series = _series_mul(series, [1, 1], upto)
        return series
    if b.kind == "B1":
        series = _series_mul([1, 1], [1, 1], upto)
        return _series_mul(series, _geometric(1, upto), upto)
    if b.kind == "B3":
        series = one
        for _ in range(3):
            series = _series_mul(series, _geometric(1, upto), upto)
        return series
    if b.kind in ("Binf", "BN3"):
        top = upto - 1 if b.kind == "Binf" else b.chain_top
        series = one
        for _ in range(3):
            series = _series_mul(series, _geometric(1, upto), upto)
        for k in range(1, max(top, 0) + 1):
            if k + 1 > upto:
                break
            series = _series_mul(series, _geometric(k + 1, upto), upto)
        return series
    if b.kind in ("Btilde_inf", "BtildeN"):
        top = upto - 1 if b.kind == "Btilde_inf" else b.chain_top
        series = _series_mul([1, 1], [1, 1], upto)          # x1, x2 exponents < 2
        series = _series_mul(series, _geometric(2, upto), upto)   # x31
        series = _series_mul(series, _geometric(1, upto), upto)   # x3
        for k in range(1, max(top, 0) + 1):
            if k + 1 > upto:
                break
            if k % 2 == 1:
                series = _series_mul(series, _geometric(k + 1, upto), upto)
            else:
                bump = [0] * (upto + 1)
                bump[0] = 1
                if k + 1 <= upto:
                    bump[k + 1] = 1
                series = _series_mul(series, bump, upto)    # even z's square to zero
        return series
    raise CatalogError(f"unknown basis descriptor {b.kind!r}")


def pbw_count(b: BasisDescriptor, n: int) -> int:
    """Number of basis monomials of total degree n."""
    if n < 0:
        raise ValueError("degree must be >= 0")
    return _pbw_series(b, n)[n]


def pbw_counts(b: BasisDescriptor, max_degree: int) -> tuple[int, ...]:
    return tuple(_pbw_series(b, max_degree)[: max_degree + 1])


# ---------------------------------------------------------------------------
# expected outcomes


@dataclass(frozen=True)
class ExpectedOutcome:
    family: str
    row_id: str
    covered: bool
    constraints: str = ""
    generators: tuple[Tensor, ...] = ()
    basis: BasisDescriptor | None = None
    dimension: int | None = None
    gk: str | None = None
    notes: tuple[str, ...] = ()

    def quadratic_generator_count(self) -> int:
        return sum(1 for g in self.generators if g.degree == 2)

    def expected_ranks(self, max_degree: int) -> tuple[int, ...] | None:
        if self.basis is None:
            return None
        return pbw_counts(self.basis, max_degree)


def _uncovered(family: str, reason: str) -> ExpectedOutcome:
    return ExpectedOutcome(family, "uncovered", False, notes=(reason,))


def _no_quadratic_row(family: str) -> ExpectedOutcome:
    return ExpectedOutcome(
        family, "no-quadratic", True,
        constraints="t^2 != 1",
        notes=("no quadratic relations for t^2 != 1; no further analysis",))


_R19_NOTE = ("stated hypothesis 't^2 != 1' conflicts with the tabulated rows; "
             "applied as t^2 = 1 (with b = 1)")
_R110_NOTE = ("coefficient array corrected: the (3,3)->(1,1) entry must read "
              "-4a^2(a+7)t, as the braid equation fails for the stated "
              "-4a(a+7)t whenever a is outside {-7, 0, 1}")
_R15_NOTE = ("the t = -1 analysis is stated once under 'p != 0' and once under "
             "'p = 0'; only p = 0 reproduces the tabulated kernels and Hilbert "
             "data (generic p leaves just 3 quadratic relations), so p = 0 is applied")
_R110_INCONSISTENT = ("row unachievable: the unique braiding compatible with the "
                      "braid equation and all listed generators has a 6-dimensional "
                      "quadratic kernel and an 8-dimensional Nichols algebra at "
                      "t = -1 for every a, so the tabulated B1 behaviour cannot "
                      "occur; expected data kept as tabulated")


def _outcome_r11(P):
    t, a, b, p = P["t"], P["a"], P["b"], P["p"]
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2,
                _X3 * _X1 - _X1 * _X3 - a * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 + (b - 2 * a) * _X1 * _X2)
        return ExpectedOutcome("R1.1", "t=1", True, "t = 1", gens,
                               BasisDescriptor("B3"), None, "3")
    gens = (_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 - b * _X1 * _X2,
            _X1 ** 2, _X2 ** 2,
            _X3 ** 2 - b * _X1 * _X3 + p * _X1 * _X2)
    return ExpectedOutcome("R1.1", "t=-1", True, "t = -1", gens,
                           BasisDescriptor("B0"), 8, "0")


def _r12_case_i_generators(P, chain_top: int | None):
    b, p, q = P["b"], P["p"], P["q"]
    chain = r12.z_chain(r12.CASE_I, {"b": b, "p": p, "q": q}, 3)
    gens = [_X2 * _X1 - _X1 * _X2,
            _X3 * _X1 - _X1 * _X3 + ((p - b) / 2) * _X1 ** 2]
    for n in (0, 1):
        gens.append(chain.z(n + 1) * chain.z(n) - chain.z(n) * chain.z(n + 1))
    if chain_top is not None:
        gens.append(chain.z(chain_top + 1)
                    + ((chain_top + 1) * (b + p) / 2) * (_X1 * chain.z(chain_top)))
    return tuple(gens)


def _r12_case_ii_generators(P, chain_top: int | None):
    b, p, q = P["b"], P["p"], P["q"]
    chain = r12.z_chain(r12.CASE_II, {"b": b, "p": p, "q": q}, 3)
    x31 = r12.X31
    gens = [_X2 * _X1 + _X1 * _X2, _X1 ** 2, _X2 ** 2,
            x31 * _X2 - _X2 * x31,
            _X3 * x31 - x31 * _X3 + (p - b) * _X1 * x31,
            chain.z(2) * chain.z(1) - chain.z(1) * chain.z(2),
            chain.z(2) * chain.z(2)]
    if chain_top is not None:
        gens.append(chain.z(chain_top + 1)
                    + ((chain_top + 1) * (b + p) / 2) * (_X1 * chain.z(chain_top)))
    return tuple(gens)


def _outcome_r12(P):
    t, a, b, p, q, k = P["t"], P["a"], P["b"], P["p"], P["q"], P["k"]
    scalars = {"b": b, "p": p, "q": q}
    if t == 1:
        if b == p - 2 * q:
            gens = (_X2 * _X1 - _X1 * _X2,
                    _X3 * _X1 - _X1 * _X3 + q * _X1 ** 2,
                    _X3 * _X2 - _X2 * _X3 + (2 * q - p) * _X1 * _X2)
            return ExpectedOutcome("R1.2", "iii-a", True, "t = 1, b = p - 2q",
                                   gens, BasisDescriptor("B3"), None, "3")
        top = r12.vanishing_beta_index(r12.CASE_I, scalars)
        if top is None:
            return ExpectedOutcome(
                "R1.2", "i-generic", True, "t = 1, b != p - 2q, all beta_n != 0",
                _r12_case_i_generators(P, None), BasisDescriptor("Binf"), None, "inf",
                notes=("infinite chain of relation generators; the listed ones "
                       "cover degrees within the verification window",))
        return ExpectedOutcome(
            "R1.2", "i-beta-zero", True, f"t = 1, b != p - 2q, beta_{top} = 0",
            _r12_case_i_generators(P, top), BasisDescriptor("BN3", top), None,
            str(top + 3))
    if b == -p:
        gens5 = (_X2 * _X1 + _X1 * _X2,
                 _X3 * _X1 + _X1 * _X3,
                 _X3 * _X2 + _X2 * _X3 + p * _X1 * _X2,
                 _X1 ** 2, _X2 ** 2)
        if a != -p * p:
            return ExpectedOutcome("R1.2", "iii-b", True,
                                   "t = -1, b = -p, a != -p^2",
                                   gens5, BasisDescriptor("B1"), None, "1")
        gens6 = gens5 + (_X3 ** 2 + k * _X1 * _X2 + p * _X1 * _X3,)
        return ExpectedOutcome("R1.2", "iii-c", True, "t = -1, b = -p, a = -p^2",
                               gens6, BasisDescriptor("B0"), 8, "0")
    top = r12.vanishing_beta_index(r12.CASE_II, scalars)
    if top is None:
        return ExpectedOutcome(
            "R1.2", "ii-generic", True, "t = -1, b != -p, all beta~_n != 0",
            _r12_case_ii_generators(P, None), BasisDescriptor("Btilde_inf"),
            None, "inf",
            notes=("infinite chain of relation generators; the listed ones "
                   "cover degrees within the verification window",))
    return ExpectedOutcome(
        "R1.2", "ii-beta-zero", True, f"t = -1, b != -p, beta~_{top} = 0",
        _r12_case_ii_generators(P, top), BasisDescriptor("BtildeN", top), None,
        str((top + 5) // 2))


def _outcome_r13(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2,
                _X3 * _X1 - _X1 * _X3 - a * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 - b * _X1 * _X2)
        return ExpectedOutcome("R1.3", "a", True, "t = 1", gens,
                               BasisDescriptor("B3"), None, "3")
    gens = [_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 - b * _X1 * _X2,
            _X1 ** 2, _X2 ** 2]
    if q != 0:
        return ExpectedOutcome("R1.3", "b", True, "t = -1, q != 0", tuple(gens),
                               BasisDescriptor("B1"), None, "1")
    gens.append(_X3 ** 2 - b * _X1 * _X3 - p * _X1 * _X2)
    return ExpectedOutcome("R1.3", "c", True, "t = -1, q = 0", tuple(gens),
                           BasisDescriptor("B0"), 8, "0")


def _outcome_r14(P):
    t, a, b, p = P["t"], P["a"], P["b"], P["p"]
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2,
                _X3 * _X1 - _X1 * _X3 - a * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 + (a - 2 * b) * _X1 * _X2)
        return ExpectedOutcome("R1.4", "a", True, "t = 1", gens,
                               BasisDescriptor("B3"), None, "3")
    gens = [_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 + (a - 2 * b) * _X1 * _X2,
            _X1 ** 2, _X2 ** 2]
    if p != 0:
        return ExpectedOutcome("R1.4", "b", True, "t = -1, p != 0", tuple(gens),
                               BasisDescriptor("B1"), None, "1")
    gens.append(_X3 ** 2 - b * _X1 * _X3)
    return ExpectedOutcome("R1.4", "c", True, "t = -1, p = 0", tuple(gens),
                           BasisDescriptor("B0"), 8, "0")


def _outcome_r15(P):
    t, a, b, q, k, l = P["t"], P["a"], P["b"], P["q"], P["k"], P["l"]
    p = P["p"]
    if t == 1:
        if p != 2 * q:
            return _uncovered("R1.5", "t = 1 analysed only under p = 2q")
        gens = (_X2 * _X1 - _X1 * _X2 - l * _X1 ** 2,
                _X3 * _X1 - _X1 * _X3 + q * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 + l * _X1 * _X3 + q * _X1 * _X2
                + (k - q * l) * _X1 ** 2)
        return ExpectedOutcome("R1.5", "a", True, "t = 1, p = 2q", gens,
                               BasisDescriptor("B3"), None, "3")
    if p != 0:
        return _uncovered("R1.5", "t = -1 analysed only under p = 0 "
                                  "(generic p admits just 3 quadratic relations)")
    gens = [_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 - l * _X1 * _X3 + q * _X1 * _X2,
            _X1 ** 2, _X2 ** 2 - l * _X1 * _X2]
    if a != b * l:
        return ExpectedOutcome("R1.5", "b", True, "t = -1, p = 0, a != b*l",
                               tuple(gens), BasisDescriptor("B1"), None, "1",
                               notes=(_R15_NOTE,))
    gens.append(_X3 ** 2 + b * _X1 * _X2)
    return ExpectedOutcome("R1.5", "c", True, "t = -1, p = 0, a = b*l", tuple(gens),
                           BasisDescriptor("B0"), 8, "0", notes=(_R15_NOTE,))


def _outcome_r16(P):
    t, a, b, p, q, k = P["t"], P["a"], P["b"], P["p"], P["q"], P["k"]
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2 - a * _X1 ** 2,
                _X3 * _X1 - _X1 * _X3 - p * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 + a * _X1 * _X3 - p * _X1 * _X2
                + (k + p * a) * _X1 ** 2)
        return ExpectedOutcome("R1.6", "t=1", True, "t = 1", gens,
                               BasisDescriptor("B3"), None, "3")
    gens = (_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 - a * _X1 * _X3 - p * _X1 * _X2,
            _X1 ** 2, _X2 ** 2 - b * _X1 * _X2,
            _X3 ** 2 - q * _X1 * _X3)
    return ExpectedOutcome("R1.6", "t=-1", True, "t = -1", gens,
                           BasisDescriptor("B0"), 8, "0")


def _outcome_r17(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    k, l, d = P["k"], P["l"], P["d"]
    if t == 1:
        if a != p - 2 * q:
            return _uncovered("R1.7", "t = 1 analysed only under a = p - 2q")
        gens = (_X2 * _X1 - _X1 * _X2 - k * _X1 ** 2,
                _X3 * _X1 - _X1 * _X3 - q * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 + k * _X1 * _X3 - q * _X1 * _X2
                - (d + q * k) * _X1 ** 2)
        return ExpectedOutcome("R1.7", "a", True, "t = 1, a = p - 2q", gens,
                               BasisDescriptor("B3"), None, "3")
    if a != -p:
        return _uncovered("R1.7", "t = -1 analysed only under a = -p")
    gens = [_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 - k * _X1 * _X3 - q * _X1 * _X2,
            _X1 ** 2, _X2 ** 2 - l * _X1 * _X2]
    if b != -p * p:
        return ExpectedOutcome("R1.7", "b", True, "t = -1, a = -p, b != -p^2",
                               tuple(gens), BasisDescriptor("B1"), None, "1")
    gens.append(_X3 ** 2 - p * _X1 * _X3)
    return ExpectedOutcome("R1.7", "c", True, "t = -1, a = -p, b = -p^2",
                           tuple(gens), BasisDescriptor("B0"), 8, "0")


def _outcome_r18(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2 - a * _X1 ** 2,
                _X3 * _X1 - _X1 * _X3 - q * _X1 ** 2,
                _X3 * _X2 - _X2 * _X3 + a * _X1 * _X3 - q * _X1 * _X2 + b * _X1 ** 2)
        return ExpectedOutcome("R1.8", "t=1", True, "t = 1", gens,
                               BasisDescriptor("B3"), None, "3")
    gens = (_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3,
            _X3 * _X2 + _X2 * _X3 - a * _X1 * _X3 + q * _X1 * _X2,
            _X1 ** 2, _X2 ** 2 - a * _X1 * _X2,
            _X3 ** 2 + p * _X1 * _X2)
    return ExpectedOutcome("R1.8", "t=-1", True, "t = -1", gens,
                           BasisDescriptor("B0"), 8, "0")


def _outcome_r19(P):
    t, a, b, p, q = P["t"], P["a"], P["b"], P["p"], P["q"]
    if b != 1:
        return _uncovered("R1.9", "analysed only under b = 1")
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2 - _X1 ** 2,
                _X3 * _X1 - _X1 * _X3 - _X1 * _X2,
                _X3 * _X2 - _X2 * _X3 - _X2 ** 2 + _X1 * _X3 + _X1 * _X2
                - a * _X1 ** 2)
        return ExpectedOutcome("R1.9", "a", True, "t = 1, b = 1", gens,
                               BasisDescriptor("B3"), None, "3", notes=(_R19_NOTE,))
    gens = [_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3 + _X1 * _X2,
            _X3 * _X2 + _X2 * _X3 - _X1 * _X3,
            _X1 ** 2, _X2 ** 2 - _X1 * _X2]
    if p != -a - q:
        return ExpectedOutcome("R1.9", "b", True, "t = -1, b = 1, p != -a - q",
                               tuple(gens), BasisDescriptor("B1"), None, "1",
                               notes=(_R19_NOTE,))
    gens.append(_X3 ** 2 - _X2 * _X3 + _X1 * _X3 - q * _X1 * _X2)
    return ExpectedOutcome("R1.9", "c", True, "t = -1, b = 1, p = -a - q",
                           tuple(gens), BasisDescriptor("B0"), 8, "0",
                           notes=(_R19_NOTE,))


def _outcome_r110(P):
    t, a = P["t"], P["a"]
    if t == 1:
        gens = (_X2 * _X1 - _X1 * _X2 - 2 * _X1 ** 2,
                _X3 * _X1 - _X1 * _X3 - 2 * _X1 * _X2,
                _X3 * _X2 - _X2 * _X3 - 2 * a * _X2 ** 2
                + (4 * a - 2) * _X1 * _X3 + (8 * a - 4) * _X1 * _X2
                - 4 * a * (a + 1) * _X1 ** 2)
        return ExpectedOutcome("R1.10", "a", True, "t = 1", gens,
                               BasisDescriptor("B3"), None, "3",
                               notes=(_R110_NOTE,))
    gens = [_X2 * _X1 + _X1 * _X2,
            _X3 * _X1 + _X1 * _X3 + 2 * _X1 * _X2,
            _X3 * _X2 + _X2 * _X3 + 2 * (1 - 2 * a) * _X1 * _X3
            + 4 * (1 - a) * _X1 * _X2,
            _X1 ** 2, _X2 ** 2 - 2 * a * _X1 * _X2]
    if a not in (F(-7), F(0), F(1)):
        return ExpectedOutcome("R1.10", "b", True, "t = -1, a not in {-7, 0, 1}",
                               tuple(gens), BasisDescriptor("B1"), None, "1",
                               notes=(_R110_NOTE, _R110_INCONSISTENT))
    gens.append(_X3 ** 2 - 2 * (2 * a - 1) * _X2 * _X3
                - a * (a * a - 2 * a - 3) * _X1 * _X3
                - 2 * a * (a * a - a + 4) * _X1 * _X2)
    return ExpectedOutcome("R1.10", "c", True, "t = -1, a in {-7, 0, 1}",
                           tuple(gens), BasisDescriptor("B0"), 8, "0",
                           notes=(_R110_NOTE,))


_OUTCOMES = {
    "R1.1": _outcome_r11, "R1.2": _outcome_r12, "R1.3": _outcome_r13,
    "R1.4": _outcome_r14, "R1.5": _outcome_r15, "R1.6": _outcome_r16,
    "R1.7": _outcome_r17, "R1.8": _outcome_r18, "R1.9": _outcome_r19,
    "R1.10": _outcome_r110,
}


def expected(family: str, params: Mapping[str, object]) -> ExpectedOutcome:
    """Catalogued outcome for the row matching the given parameters."""
    values = normalize_params(family, params)
    if values["t"] == 0:
        raise ConstraintError("constraint t != 0 violated")
    if values["t"] ** 2 != 1:
        return _no_quadratic_row(family)
    return _OUTCOMES[family](values)


# ---------------------------------------------------------------------------
# rows and parameter sampling


def _draw(rng: random.Random) -> Fraction:
    num = rng.choice([n for n in range(-5, 6) if n])
    den = rng.randint(1, 5)
    return Fraction(num, den)


def _draw_avoiding(rng: random.Random, avoid) -> Fraction:
    for _ in range(100):
        v = _draw(rng)
        if not avoid(v):
            return v
    raise CatalogError("failed to sample a parameter away from the excluded set")


@dataclass(frozen=True)
class Row:
    family: str
    row_id: str
    constraints: str
    basis_label: str
    gk: str
    sampler: Callable[[random.Random], dict[str, Fraction]] = field(repr=False)


def _free(rng: random.Random, family: str, pins: dict[str, Fraction]) -> dict[str, Fraction]:
    out = dict(pins)
    for name in family_parameters(family):
        if name not in out:
            out[name] = _draw(rng)
    return out


def _rows() -> list[Row]:
    rows: list[Row] = []

    def add(family, row_id, constraints, basis_label, gk, sampler):
        rows.append(Row(family, row_id, constraints, basis_label, gk, sampler))

    one = F(1)
    add("R1.1", "t=1", "t = 1", "B3", "3",
        lambda rng: _free(rng, "R1.1", {"t": one}))
    add("R1.1", "t=-1", "t = -1", "B0", "0 (dim 8)",
        lambda rng: _free(rng, "R1.1", {"t": -one}))

    def r12_i_generic(rng):
        while True:
            P = _free(rng, "R1.2", {"t": one})
            if P["b"] == P["p"] - 2 * P["q"]:
                continue
            if r12.vanishing_beta_index(r12.CASE_I, P) is None:
                return P

    def r12_i_beta_zero(rng):
        b = _draw(rng)
        p = _draw_avoiding(rng, lambda v: v == -b)
        return _free(rng, "R1.2", {"t": one, "b": b, "p": p, "q": -b})

    def r12_ii_generic(rng):
        while True:
            P = _free(rng, "R1.2", {"t": -one})
            if P["b"] == -P["p"]:
                continue
            if r12.vanishing_beta_index(r12.CASE_II, P) is None:
                return P

    def r12_ii_beta_zero(rng):
        b = _draw(rng)
        p = _draw_avoiding(rng, lambda v: v == -b)
        return _free(rng, "R1.2", {"t": -one, "b": b, "p": p, "q": -b})

    def r12_iii_a(rng):
        P = _free(rng, "R1.2", {"t": one})
        P["b"] = P["p"] - 2 * P["q"]
        return P

    def r12_iii_b(rng):
        P = _free(rng, "R1.2", {"t": -one})
        P["b"] = -P["p"]
        if P["a"] == -P["p"] ** 2:
            P["a"] = P["a"] + 1
        return P

    def r12_iii_c(rng):
        P = _free(rng, "R1.2", {"t": -one})
        P["b"] = -P["p"]
        P["a"] = -P["p"] ** 2
        return P

    add("R1.2", "i-generic", "t = 1, b != p - 2q, all beta_n != 0", "Binf", "inf",
        r12_i_generic)
    add("R1.2", "i-beta-zero", "t = 1, b != p - 2q, beta_N = 0", "B(N+3)", "N+3",
        r12_i_beta_zero)
    add("R1.2", "ii-generic", "t = -1, b != -p, all beta~_n != 0", "Btilde_inf",
        "inf", r12_ii_generic)
    add("R1.2", "ii-beta-zero", "t = -1, b != -p, beta~_N = 0", "Btilde((N+5)/2)",
        "(N+5)/2", r12_ii_beta_zero)
    add("R1.2", "iii-a", "t = 1, b = p - 2q", "B3", "3", r12_iii_a)
    add("R1.2", "iii-b", "t = -1, b = -p, a != -p^2", "B1", "1", r12_iii_b)
    add("R1.2", "iii-c", "t = -1, b = -p, a = -p^2", "B0", "0 (dim 8)", r12_iii_c)

    add("R1.3", "a", "t = 1", "B3", "3",
        lambda rng: _free(rng, "R1.3", {"t": one}))
    add("R1.3", "b", "t = -1, q != 0", "B1", "1",
        lambda rng: _free(rng, "R1.3", {"t": -one, "q": _draw(rng)}))
    add("R1.3", "c", "t = -1, q = 0", "B0", "0 (dim 8)",
        lambda rng: _free(rng, "R1.3", {"t": -one, "q": F(0)}))

    add("R1.4", "a", "t = 1", "B3", "3",
        lambda rng: _free(rng, "R1.4", {"t": one}))
    add("R1.4", "b", "t = -1, p != 0", "B1", "1",
        lambda rng: _free(rng, "R1.4", {"t": -one, "p": _draw(rng)}))
    add("R1.4", "c", "t = -1, p = 0", "B0", "0 (dim 8)",
        lambda rng: _free(rng, "R1.4", {"t": -one, "p": F(0)}))

    def r15_a(rng):
        P = _free(rng, "R1.5", {"t": one})
        P["p"] = 2 * P["q"]
        return P

    def r15_b(rng):
        P = _free(rng, "R1.5", {"t": -one, "p": F(0)})
        if P["a"] == P["b"] * P["l"]:
            P["a"] = P["a"] + 1
        return P

    def r15_c(rng):
        P = _free(rng, "R1.5", {"t": -one, "p": F(0)})
        P["a"] = P["b"] * P["l"]
        return P

    add("R1.5", "a", "t = 1, p = 2q", "B3", "3", r15_a)
    add("R1.5", "b", "t = -1, p = 0, a != b*l", "B1", "1", r15_b)
    add("R1.5", "c", "t = -1, p = 0, a = b*l", "B0", "0 (dim 8)", r15_c)

    add("R1.6", "t=1", "t = 1", "B3", "3",
        lambda rng: _free(rng, "R1.6", {"t": one}))
    add("R1.6", "t=-1", "t = -1", "B0", "0 (dim 8)",
        lambda rng: _free(rng, "R1.6", {"t": -one}))

    def r17_a(rng):
        P = _free(rng, "R1.7", {"t": one})
        P["a"] = P["p"] - 2 * P["q"]
        return P

    def r17_b(rng):
        P = _free(rng, "R1.7", {"t": -one})
        P["a"] = -P["p"]
        if P["b"] == -P["p"] ** 2:
            P["b"] = P["b"] + 1
        return P

    def r17_c(rng):
        P = _free(rng, "R1.7", {"t": -one})
        P["a"] = -P["p"]
        P["b"] = -P["p"] ** 2
        return P

    add("R1.7", "a", "t = 1, a = p - 2q", "B3", "3", r17_a)
    add("R1.7", "b", "t = -1, a = -p, b != -p^2", "B1", "1", r17_b)
    add("R1.7", "c", "t = -1, a = -p, b = -p^2", "B0", "0 (dim 8)", r17_c)

    add("R1.8", "t=1", "t = 1", "B3", "3",
        lambda rng: _free(rng, "R1.8", {"t": one}))
    add("R1.8", "t=-1", "t = -1", "B0", "0 (dim 8)",
        lambda rng: _free(rng, "R1.8", {"t": -one}))

    def r19_b(rng):
        P = _free(rng, "R1.9", {"t": -one, "b": one})
        if P["p"] == -P["a"] - P["q"]:
            P["p"] = P["p"] + 1
        return P

    def r19_c(rng):
        P = _free(rng, "R1.9", {"t": -one, "b": one})
        P["p"] = -P["a"] - P["q"]
        return P

    add("R1.9", "a", "t = 1, b = 1", "B3", "3",
        lambda rng: _free(rng, "R1.9", {"t": one, "b": one}))
    add("R1.9", "b", "t = -1, b = 1, p != -a - q", "B1", "1", r19_b)
    add("R1.9", "c", "t = -1, b = 1, p = -a - q", "B0", "0 (dim 8)", r19_c)

    def r110_b(rng):
        a = _draw_avoiding(rng, lambda v: v in (F(-7), F(0), F(1)))
        return {"t": -one, "a": a}

    def r110_c(rng):
        return {"t": -one, "a": F(rng.choice([-7, 0, 1]))}

    add("R1.10", "a", "t = 1", "B3", "3",
        lambda rng: _free(rng, "R1.10", {"t": one}))
    add("R1.10", "b", "t = -1, a not in {-7, 0, 1}", "B1", "1", r110_b)
    add("R1.10", "c", "t = -1, a in {-7, 0, 1}", "B0", "0 (dim 8)", r110_c)
    return rows


ROWS: tuple[Row, ...] = tuple(_rows())


def rows_for(family: str) -> list[Row]:
    if family not in _GRIDS:
        raise UnknownFamilyError(f"unknown family {family!r}")
    return [row for row in ROWS if row.family == family]


def find_row(family: str, row_id: str) -> Row:
    for row in rows_for(family):
        if row.row_id == row_id:
            return row
    known = ", ".join(r.row_id for r in rows_for(family))
    raise CatalogError(f"{family} has no row {row_id!r} (known rows: {known})")


def sample_params(family: str, row_id: str, rng: random.Random) -> dict[str, Fraction]:
    return find_row(family, row_id).sampler(rng)


@dataclass(frozen=True)
class FamilySummary:
    name: str
    parameters: tuple[str, ...]
    rows: tuple[tuple[str, str, str, str], ...]  # (row id, constraints, basis, growth)


def list_families() -> list[FamilySummary]:
    out = []
    for name in FAMILY_NAMES:
        out.append(FamilySummary(
            name, family_parameters(name),
            tuple((r.row_id, r.constraints, r.basis_label, r.gk)
                  for r in rows_for(name))))
    return out
