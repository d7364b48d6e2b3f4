"""Exact arithmetic in the rings Z[zeta_n] of cyclotomic integers.

An element is stored as a length-n integer vector indexed by
root-of-unity exponents (coefficient of zeta_n^j at index j).  This
representation makes the formulas of the verifier - which are naturally
exponent-indexed - cheap to build, while equality, zero tests and
integer divisibility go through the canonical form: the remainder
modulo the n-th cyclotomic polynomial, whose power basis 1, zeta, ...,
zeta^(phi(n)-1) is a Z-basis of Z[zeta_n].  The canonical form is
computed lazily and cached; the cache write is idempotent (every writer
computes the same tuple), so instances may be shared across threads.

All coefficients are arbitrary-precision Python integers; cyclotomic
polynomials are obtained by exact division, never numerically.
"""

from __future__ import annotations

import cmath
from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

from torunits.numtheory import divisors, euler_phi, radical


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class IntPoly:
    """Univariate integer polynomial, lowest degree first, trailing zeros stripped."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        object.__setattr__(self, "coeffs", _trim(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @staticmethod
    def x_power_minus_one(m: int) -> "IntPoly":
        if m < 1:
            raise ValueError(f"need m >= 1, got {m}")
        return IntPoly((-1,) + (0,) * (m - 1) + (1,))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return IntPoly(out)

    def divide_exact(self, divisor: "IntPoly") -> "IntPoly":
        """Quotient self / divisor; raises unless the division is exact over Z."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dcs = divisor.coeffs
        dd = len(dcs) - 1
        lead = dcs[-1]
        qn = len(rem) - dd
        if qn <= 0:
            if any(rem):
                raise ValueError("inexact polynomial division")
            return IntPoly()
        quot = [0] * qn
        for i in range(len(rem) - 1, dd - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q, r = divmod(c, lead)
            if r:
                raise ValueError("inexact polynomial division")
            quot[i - dd] = q
            off = i - dd
            for j, dc in enumerate(dcs):
                if dc:
                    rem[off + j] -= q * dc
        if any(rem):
            raise ValueError("inexact polynomial division: nonzero remainder")
        return IntPoly(quot)

    def compose_x_power(self, s: int) -> "IntPoly":
        """The polynomial f(X^s)."""
        if s < 1:
            raise ValueError(f"need s >= 1, got {s}")
        if self.is_zero:
            return self
        out = [0] * (s * self.degree + 1)
        for i, c in enumerate(self.coeffs):
            out[s * i] = c
        return IntPoly(out)


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial, by iterated exact division.

    For squarefree m, X^m - 1 is divided by the polynomials of the
    proper divisors; for general m the squarefree core is inflated via
    the exponent substitution X -> X^(m/rad(m)).  Both steps are exact
    integer arithmetic and the result is checked to be monic of degree
    euler_phi(m).
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if m == 1:
        return IntPoly((-1, 1))
    rad = radical(m)
    if rad != m:
        out = cyclotomic_poly(rad).compose_x_power(m // rad)
    else:
        out = IntPoly.x_power_minus_one(m)
        for d in divisors(m)[:-1]:
            out = out.divide_exact(cyclotomic_poly(d))
    if not out.is_monic or out.degree != euler_phi(m):
        raise ArithmeticError(f"cyclotomic polynomial computation failed for m={m}")
    return out


def _reduce_mod_cyclotomic(raw: Sequence[int], n: int) -> tuple[int, ...]:
    """Remainder of sum(raw[j] X^j) modulo the n-th cyclotomic polynomial."""
    phi = cyclotomic_poly(n).coeffs
    deg = len(phi) - 1
    rem = list(raw)
    for i in range(len(rem) - 1, deg - 1, -1):
        c = rem[i]
        if c:
            rem[i] = 0
            off = i - deg
            for j in range(deg):
                pj = phi[j]
                if pj:
                    rem[off + j] -= c * pj
    rem = rem[:deg]
    rem.extend([0] * (deg - len(rem)))
    return tuple(rem)


class CycInt:
    """An element of Z[zeta_n], exponent vector plus cached canonical form."""

    __slots__ = ("n", "_coeffs", "_reduced")

    def __init__(self, n: int, coeffs: Sequence[int]):
        if n < 1:
            raise ValueError(f"modulus must be positive, got {n}")
        coeffs = tuple(coeffs)
        if len(coeffs) != n:
            raise ValueError(f"expected {n} coefficients, got {len(coeffs)}")
        self.n = n
        self._coeffs = coeffs
        self._reduced = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def zero(n: int) -> "CycInt":
        return CycInt(n, (0,) * n)

    @staticmethod
    def integer(n: int, c: int) -> "CycInt":
        return CycInt(n, (c,) + (0,) * (n - 1))

    @staticmethod
    def one(n: int) -> "CycInt":
        return CycInt.integer(n, 1)

    @staticmethod
    def root(n: int, e: int = 1) -> "CycInt":
        """The root of unity zeta_n^e."""
        coeffs = [0] * n
        coeffs[e % n] = 1
        return CycInt(n, coeffs)

    @staticmethod
    def from_exponents(n: int, terms: dict[int, int]) -> "CycInt":
        coeffs = [0] * n
        for e, c in terms.items():
            coeffs[e % n] += c
        return CycInt(n, coeffs)

    # -- views -------------------------------------------------------

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    @property
    def reduced(self) -> tuple[int, ...]:
        """Coordinates in the power basis 1, zeta, ..., zeta^(phi(n)-1)."""
        r = self._reduced
        if r is None:
            r = _reduce_mod_cyclotomic(self._coeffs, self.n)
            self._reduced = r  # idempotent: all writers compute the same tuple
        return r

    def is_zero(self) -> bool:
        return not any(self.reduced)

    def __repr__(self) -> str:
        terms = [f"{c}*z^{e}" for e, c in enumerate(self._coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"CycInt(n={self.n}: {body})"

    # -- ring structure ----------------------------------------------

    def _check_same_ring(self, other: "CycInt") -> None:
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "CycInt") -> "CycInt":
        self._check_same_ring(other)
        return CycInt(self.n, [a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "CycInt") -> "CycInt":
        self._check_same_ring(other)
        return CycInt(self.n, [a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "CycInt":
        return CycInt(self.n, [-a for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.n, [other * a for a in self._coeffs])
        self._check_same_ring(other)
        n = self.n
        out = [0] * n
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    if b:
                        out[(i + j) % n] += a * b
        return CycInt(n, out)

    def __rmul__(self, other: int) -> "CycInt":
        if not isinstance(other, int):
            return NotImplemented
        return self.__mul__(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.n == other.n and self.reduced == other.reduced

    def __hash__(self) -> int:
        return hash((self.n, self.reduced))

    # -- Galois action and derived predicates ------------------------

    def galois(self, s: int) -> "CycInt":
        """Apply zeta^j -> zeta^(s*j); s must be invertible mod n."""
        n = self.n
        if gcd(s, n) != 1:
            raise ValueError(f"{s} is not invertible modulo {n}")
        out = [0] * n
        for j, c in enumerate(self._coeffs):
            if c:
                out[(s * j) % n] += c
        return CycInt(n, out)

    def conjugate(self) -> "CycInt":
        return self.galois(self.n - 1) if self.n > 1 else self

    def is_real(self) -> bool:
        """Whether the element is fixed by zeta -> zeta^-1."""
        return self == self.conjugate()

    def divisible_by(self, k: int) -> bool:
        """Membership in k*Z[zeta_n], tested on canonical coordinates."""
        if k < 1:
            raise ValueError(f"need k >= 1, got {k}")
        return all(c % k == 0 for c in self.reduced)

    def complex_value(self, from_reduced: bool = False) -> complex:
        """Numeric embedding at exp(2*pi*i/n); for cross-checks only."""
        w = 2j * cmath.pi / self.n
        src = self.reduced if from_reduced else self._coeffs
        return sum(c * cmath.exp(w * j) for j, c in enumerate(src) if c)


def eval_at_root(f: IntPoly, n: int) -> CycInt:
    """The value f(zeta_n), exponents folded mod n."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    coeffs = [0] * n
    for j, c in enumerate(f.coeffs):
        if c:
            coeffs[j % n] += c
    return CycInt(n, coeffs)


def real_trace(n: int, x: int) -> CycInt:
    """zeta_n^x + zeta_n^-x: the trace of zeta_n^x to the maximal real subfield.

    Defined for odd n >= 3; equals the integer 2 when n divides x.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"need an odd modulus >= 3, got {n}")
    coeffs = [0] * n
    coeffs[x % n] += 1
    coeffs[-x % n] += 1
    return CycInt(n, coeffs)


def rational_trace(a: CycInt) -> int:
    """Trace of a from Q(zeta_n) down to Q, as an exact integer."""
    n = a.n
    total = CycInt.zero(n)
    for s in range(n):
        if gcd(s, n) == 1:
            total = total + a.galois(s)
    red = total.reduced
    if any(red[1:]):
        raise ArithmeticError("trace did not reduce to a rational integer")
    return red[0] if red else 0


__all__ = [
    "CycInt",
    "IntPoly",
    "cyclotomic_poly",
    "eval_at_root",
    "rational_trace",
    "real_trace",
]
