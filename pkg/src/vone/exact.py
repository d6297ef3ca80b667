"""Exact integer arithmetic primitives.

2-adic valuations, generalized binomial coefficients, the alternating and
odd-index binomial power sums that drive every exponent computation in this
package, and truncated power series over Z for generating-function checks.

Everything here is pure and exact: Python ints throughout, no floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import total_ordering


class InexactDivisionError(ArithmeticError):
    """A division that was required to be exact left a remainder."""


@total_ordering
class Valuation:
    """A 2-adic valuation: a non-negative integer, or INFINITY (for nu(0)).

    Totally ordered with INFINITY on top, so ``min()`` over a collection
    ignores INFINITY unless every entry is INFINITY.  Finite valuations
    compare equal to the corresponding int.  Adding an int shifts a finite
    valuation and leaves INFINITY alone.
    """

    __slots__ = ("_v",)

    def __init__(self, value: int | None):
        if value is not None:
            if not isinstance(value, int):
                raise TypeError(f"valuation must be an int or None, got {value!r}")
            if value < 0:
                raise ValueError(f"valuation must be >= 0, got {value}")
        self._v = value

    @property
    def is_infinite(self) -> bool:
        return self._v is None

    @property
    def value(self) -> int:
        """The finite value; raises on INFINITY."""
        if self._v is None:
            raise ValueError("INFINITY has no finite value")
        return self._v

    def _cmp_key(self, other) -> tuple[int, int] | None:
        if isinstance(other, Valuation):
            return (1, 0) if other._v is None else (0, other._v)
        if isinstance(other, int):
            return (0, other)
        return None

    def __eq__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        mine = (1, 0) if self._v is None else (0, self._v)
        return mine == key

    def __lt__(self, other) -> bool:
        key = self._cmp_key(other)
        if key is None:
            return NotImplemented
        mine = (1, 0) if self._v is None else (0, self._v)
        return mine < key

    def __hash__(self):
        return hash(self._v) if self._v is not None else hash("nu-infinity")

    def __add__(self, other):
        if isinstance(other, Valuation):
            if self._v is None or other._v is None:
                return INFINITY
            shift = other._v
        elif isinstance(other, int):
            if self._v is None:
                return INFINITY
            shift = other
        else:
            return NotImplemented
        return Valuation(self._v + shift)

    __radd__ = __add__

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return "INFINITY" if self._v is None else f"Valuation({self._v})"


INFINITY = Valuation(None)


def nu(x: int) -> Valuation:
    """Exponent of 2 in x; INFINITY for x = 0, sign-independent."""
    if x == 0:
        return INFINITY
    return Valuation((x & -x).bit_length() - 1)


def binom(a: int, k: int) -> int:
    """Generalized binomial coefficient C(a, k) for any integers a, k.

    0 for k < 0; otherwise a(a-1)...(a-k+1)/k!.  The upper index may be
    negative, e.g. binom(-1, k) = (-1)**k.
    """
    if k < 0:
        return 0
    if a >= 0:
        return math.comb(a, k) if k <= a else 0
    num = 1
    for i in range(k):
        num *= a - i
    return num // math.factorial(k)


def s_full(m: int, j: int) -> int:
    """Alternating power sum sum_{k=0}^{j} (-1)^k C(j,k) k^m.

    Vanishes for j > m; equals (-1)^j j! * Stirling2(m, j) in general.
    Convention 0^0 = 1 covers the (m, j) = (0, 0) case.
    """
    if m < 0 or j < 0:
        raise ValueError("s_full requires m >= 0 and j >= 0")
    return sum((-1) ** k * math.comb(j, k) * k**m for k in range(j + 1))


def s_odd(m: int, j: int) -> int:
    """Odd-index power sum sum_{k odd, 1 <= k <= j} C(j,k) k^m."""
    if m < 0 or j < 0:
        raise ValueError("s_odd requires m >= 0 and j >= 0")
    return sum(math.comb(j, k) * k**m for k in range(1, j + 1, 2))


def r_sp(m: int, j: int, n: int) -> int:
    """Symplectic relation coefficient for n < j <= 2n:

        sum_{k odd} C(2n+1, j-k) k^m  -  sum_{k odd} C(2n+1, 2n+1-j-k) k^m,

    both sums over odd k >= 1 where the binomial coefficients are nonzero.
    """
    if m < 0 or n < 1:
        raise ValueError("r_sp requires m >= 0 and n >= 1")
    if not n < j <= 2 * n:
        raise ValueError(f"r_sp requires n < j <= 2n, got j={j}, n={n}")
    top = 2 * n + 1
    first = sum(math.comb(top, j - k) * k**m for k in range(1, j + 1, 2))
    second = sum(math.comb(top, top - j - k) * k**m for k in range(1, top - j + 1, 2))
    return first - second


def sigma(j: int, n: int) -> int:
    """Partial binomial row sum sum_{k=0}^{j} C(2n+1, k).

    0 for j < 0; the full row sum 2^(2n+1) once j >= 2n+1.
    """
    if n < 1:
        raise ValueError("sigma requires n >= 1")
    if j < 0:
        return 0
    top = 2 * n + 1
    if j >= top:
        return 1 << top
    return sum(math.comb(top, k) for k in range(j + 1))


@dataclass(frozen=True)
class IntSeries:
    """Integer power series truncated below ``trunc``.

    Coefficients of x^0 .. x^(trunc-1) are exact; higher degrees are
    unknown and inaccessible.  Ring operations are exact below the
    truncation degree; division is provided only when it is exact at every
    step (unit constant term, or vanishing remainders throughout).
    """

    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("truncation degree must be >= 0")
        c = tuple(self.coeffs[: self.trunc])
        c += (0,) * (self.trunc - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def of(cls, coeffs, trunc: int) -> "IntSeries":
        return cls(tuple(coeffs), trunc)

    @classmethod
    def one(cls, trunc: int) -> "IntSeries":
        return cls((1,), trunc)

    def coef(self, d: int) -> int:
        """Coefficient of x^d; 0 for d < 0, error at or above truncation."""
        if d < 0:
            return 0
        if d >= self.trunc:
            raise IndexError(f"degree {d} is at or above truncation {self.trunc}")
        return self.coeffs[d]

    def _common_trunc(self, other: "IntSeries") -> int:
        return min(self.trunc, other.trunc)

    def __add__(self, other: "IntSeries") -> "IntSeries":
        t = self._common_trunc(other)
        return IntSeries(tuple(self.coeffs[i] + other.coeffs[i] for i in range(t)), t)

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        t = self._common_trunc(other)
        return IntSeries(tuple(self.coeffs[i] - other.coeffs[i] for i in range(t)), t)

    def __neg__(self) -> "IntSeries":
        return IntSeries(tuple(-c for c in self.coeffs), self.trunc)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries(tuple(c * other for c in self.coeffs), self.trunc)
        t = self._common_trunc(other)
        out = [0] * t
        for i, a in enumerate(self.coeffs[:t]):
            if a == 0:
                continue
            for j in range(t - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] += a * b
        return IntSeries(tuple(out), t)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "IntSeries":
        if e < 0:
            raise ValueError("negative powers are not defined; divide instead")
        result = IntSeries.one(self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def exact_div(self, other) -> "IntSeries":
        """Exact division by an int or an IntSeries.

        Raises InexactDivisionError if any coefficient division leaves a
        remainder (e.g. a non-unit constant term that does not divide
        exactly at every degree).
        """
        if isinstance(other, int):
            if other == 0:
                raise InexactDivisionError("division by zero")
            out = []
            for c in self.coeffs:
                q, r = divmod(c, other)
                if r:
                    raise InexactDivisionError(f"coefficient {c} not divisible by {other}")
                out.append(q)
            return IntSeries(tuple(out), self.trunc)
        t = self._common_trunc(other)
        b0 = other.coeffs[0] if t > 0 else 0
        if t > 0 and b0 == 0:
            raise InexactDivisionError("divisor has zero constant term")
        q = [0] * t
        for k in range(t):
            acc = self.coeffs[k]
            for i in range(k):
                bj = other.coeffs[k - i]
                if bj and q[i]:
                    acc -= q[i] * bj
            qk, r = divmod(acc, b0)
            if r:
                raise InexactDivisionError(f"inexact at degree {k}: remainder {r}")
            q[k] = qk
        return IntSeries(tuple(q), t)

    def __str__(self) -> str:
        terms = [f"{c}*x^{d}" for d, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(x^{self.trunc})"
