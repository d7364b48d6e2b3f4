"""The distinguished integral basis of the real cyclotomic subring.

For odd n, the ring Z[zeta_n + zeta_n^-1] of real cyclotomic integers
has a Z-basis consisting of the elements real_trace(n, b) where b runs
over the basis exponents of torunits.numtheory (one representative per
sign pair).  The coordinate of a real trace element in this basis has a
closed form:

    coeff of b in real_trace(n, i)
        = pair_weight(n, i) * moebius(g) * [b ~ i mod n/g],   g = near_zero_part(n, i)

This module provides the closed formula, a general decomposition
routine that solves the exact linear system in the power basis of
Z[zeta_n] (used as an independent oracle for the formula), the inverse
recomposition, and the change-of-basis determinant against the power
basis of the real subring.

Rational linear algebra is done with Fraction arithmetic; a non-integer
coordinate for an integral element would contradict the basis property
and raises DecompositionError rather than being rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from torunits.cyclotomic import CycInt, real_trace
from torunits.numtheory import (
    basis_exponents,
    moebius,
    near_zero_part,
    pair_weight,
    same_class,
)


class DecompositionError(ArithmeticError):
    """An exact solve produced something the basis property forbids."""


@lru_cache(maxsize=None)
def basis_indices(n: int) -> tuple[int, ...]:
    """One representative in [1, n/2] per sign pair of basis exponents."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd modulus >= 3, got {n}")
    return tuple(b for b in basis_exponents(n) if 2 * b < n)


def basis_coeff(n: int, b: int, i: int) -> int:
    """Closed-form coordinate of real_trace(n, i) at basis index b."""
    if b not in _basis_index_set(n):
        raise ValueError(f"{b} is not a basis index for n={n}")
    g = near_zero_part(n, i)
    if not same_class(n // g, b, i):
        return 0
    return pair_weight(n, i) * moebius(g)


@dataclass(frozen=True)
class RealCoords:
    """Coordinates of a real cyclotomic integer in the distinguished basis."""

    n: int
    coords: Mapping[int, int]

    def __post_init__(self):
        expected = basis_indices(self.n)
        if set(self.coords.keys()) != set(expected):
            raise ValueError("coordinate keys must be exactly the basis indices")
        object.__setattr__(self, "coords", {b: int(self.coords[b]) for b in expected})

    def __getitem__(self, b: int) -> int:
        return self.coords[b]


def decompose_combination(n: int, terms: Mapping[int, int]) -> RealCoords:
    """Coordinates of sum(c_i * real_trace(n, i)) via the closed formula."""
    coords = {}
    for b in basis_indices(n):
        coords[b] = sum(c * basis_coeff(n, b, i) for i, c in terms.items())
    return RealCoords(n, coords)


def decompose(x: CycInt) -> RealCoords:
    """Coordinates of a real element, by exact linear solve in the power basis.

    This is the generic route: it uses nothing but the reduced forms of
    the basis elements, so it serves as an independent oracle for
    decompose_combination / basis_coeff.
    """
    n = x.n
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd modulus >= 3, got {n}")
    if not x.is_real():
        raise ValueError("element is not fixed by inversion, cannot decompose")
    solver = _basis_solver(n)
    try:
        sol = solver.solve([Fraction(c) for c in x.reduced])
    except _InconsistentSystem as exc:
        raise DecompositionError(f"no rational coordinates over n={n}: {exc}") from exc
    coords = {}
    for b, v in zip(basis_indices(n), sol):
        if v.denominator != 1:
            raise DecompositionError(
                f"non-integer coordinate {v} at basis index {b} for n={n}; "
                "this contradicts the integral basis property"
            )
        coords[b] = int(v)
    return RealCoords(n, coords)


def recompose(e: RealCoords) -> CycInt:
    """The element sum(coords[b] * real_trace(n, b))."""
    n = e.n
    coeffs = [0] * n
    for b, c in e.coords.items():
        coeffs[b % n] += c
        coeffs[-b % n] += c
    return CycInt(n, coeffs)


def basis_change_det(n: int) -> int:
    """Determinant of the matrix expressing the basis in real power-basis terms.

    Rows express each basis element real_trace(n, b) in the basis
    1, a, a^2, ..., a^(phi(n)/2 - 1) with a = real_trace(n, 1); the
    entries are integers and the determinant is +-1 exactly when the
    distinguished set is a Z-basis of Z[a].
    """
    k = len(basis_indices(n))
    solver = _power_solver(n)
    rows = []
    for b in basis_indices(n):
        rhs = [Fraction(c) for c in real_trace(n, b).reduced]
        sol = solver.solve(rhs)
        row = []
        for j, v in enumerate(sol):
            if v.denominator != 1:
                raise DecompositionError(
                    f"real_trace({n},{b}) has non-integer power-basis coordinate {v} at {j}"
                )
            row.append(int(v))
        rows.append(row)
    assert len(rows) == k
    return _int_det(rows)


# -- exact linear algebra ---------------------------------------------


class _InconsistentSystem(ValueError):
    pass


class _EchelonSolver:
    """Forward-eliminates an exact rational matrix once, then solves many RHS.

    The matrix is given by rows (more rows than columns is fine); it
    must have full column rank.  Row operations are recorded so each
    solve costs one pass over the recorded operations plus a back
    substitution, and any residual in the dependent rows is reported as
    an inconsistency.
    """

    def __init__(self, rows: Sequence[Sequence[int]]):
        m = [[Fraction(v) for v in row] for row in rows]
        self.nrows = len(m)
        self.ncols = len(m[0]) if m else 0
        self.ops: list[tuple] = []
        self.pivots: list[int] = []  # pivots[j] = row holding the pivot of column j
        r = 0
        for col in range(self.ncols):
            pivot = next((i for i in range(r, self.nrows) if m[i][col]), None)
            if pivot is None:
                raise ValueError(f"matrix does not have full column rank (column {col})")
            if pivot != r:
                m[pivot], m[r] = m[r], m[pivot]
                self.ops.append(("swap", pivot, r))
            for i in range(r + 1, self.nrows):
                if m[i][col]:
                    f = m[i][col] / m[r][col]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
                    self.ops.append(("elim", i, r, f))
            self.pivots.append(r)
            r += 1
        self.m = m

    def solve(self, rhs: Sequence[Fraction]) -> list[Fraction]:
        if len(rhs) != self.nrows:
            raise ValueError(f"expected {self.nrows} right-hand entries, got {len(rhs)}")
        v = list(rhs)
        for op in self.ops:
            if op[0] == "swap":
                _, i, j = op
                v[i], v[j] = v[j], v[i]
            else:
                _, i, j, f = op
                v[i] = v[i] - f * v[j]
        x = [Fraction(0)] * self.ncols
        for col in range(self.ncols - 1, -1, -1):
            r = self.pivots[col]
            acc = v[r]
            row = self.m[r]
            for c in range(col + 1, self.ncols):
                if row[c]:
                    acc -= row[c] * x[c]
            x[col] = acc / row[col]
        for i in range(self.ncols, self.nrows):
            acc = v[i]
            row = self.m[i]
            for c in range(self.ncols):
                if row[c]:
                    acc -= row[c] * x[c]
            if acc:
                raise _InconsistentSystem(f"residual {acc} in dependent row {i}")
        return x


def _int_det(rows: list[list[int]]) -> int:
    """Bareiss fraction-free determinant of a square integer matrix."""
    m = [row[:] for row in rows]
    size = len(m)
    if size == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(size - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


@lru_cache(maxsize=None)
def _basis_index_set(n: int) -> frozenset[int]:
    return frozenset(basis_indices(n))


@lru_cache(maxsize=None)
def _basis_solver(n: int) -> _EchelonSolver:
    """Solver for the system whose columns are reduced basis elements."""
    cols = [real_trace(n, b).reduced for b in basis_indices(n)]
    rows = [[col[r] for col in cols] for r in range(len(cols[0]))]
    return _EchelonSolver(rows)


@lru_cache(maxsize=None)
def _power_solver(n: int) -> _EchelonSolver:
    """Solver whose columns are reduced powers of real_trace(n, 1)."""
    k = len(basis_indices(n))
    powers = [CycInt.one(n)]
    a = real_trace(n, 1)
    for _ in range(k - 1):
        powers.append(powers[-1] * a)
    cols = [p.reduced for p in powers]
    rows = [[col[r] for col in cols] for r in range(len(cols[0]))]
    return _EchelonSolver(rows)


__all__ = [
    "DecompositionError",
    "RealCoords",
    "basis_change_det",
    "basis_coeff",
    "basis_indices",
    "decompose",
    "decompose_combination",
    "recompose",
]
