"""Exact linear algebra over the integers.

Smith normal form by minimal-pivot elimination, cokernels of integer
matrices as finitely generated abelian groups, the Q/Z-kernel dual read off
the same normal form, and extraction of 2-primary parts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .exact import nu


class IntMatrix:
    """Dense rectangular matrix of Python ints, immutable to callers."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data, cols: int | None = None):
        rows = tuple(tuple(int(x) for x in row) for row in data)
        self._data = rows
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != self.cols for r in rows):
            raise ValueError("ragged rows: matrix must be rectangular")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> "IntMatrix":
        return cls([[scale if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def stack(cls, *blocks: "IntMatrix") -> "IntMatrix":
        cols = {b.cols for b in blocks}
        if len(cols) > 1:
            raise ValueError("stacked blocks must share a column count")
        data = []
        for b in blocks:
            data.extend(b._data)
        return cls(data, cols=blocks[0].cols if blocks else 0)

    def row(self, i: int) -> tuple[int, ...]:
        return self._data[i]

    def entry(self, i: int, j: int) -> int:
        return self._data[i][j]

    def tolists(self) -> list[list[int]]:
        return [list(r) for r in self._data]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        self._check_same_shape(other)
        return IntMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._data, other._data)
            ]
        )

    def __neg__(self) -> "IntMatrix":
        return IntMatrix([[-a for a in r] for r in self._data])

    def __mul__(self, k: int) -> "IntMatrix":
        if not isinstance(k, int):
            return NotImplemented
        return IntMatrix([[a * k for a in r] for r in self._data])

    __rmul__ = __mul__

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        cols_of_other = other.transpose()._data
        return IntMatrix(
            [
                [sum(a * b for a, b in zip(row, col)) for col in cols_of_other]
                for row in self._data
            ],
            cols=other.cols,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __repr__(self) -> str:
        return f"IntMatrix({[list(r) for r in self._data]!r})"

    def _check_same_shape(self, other: "IntMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {other.shape}")


def smith_normal_form(m: IntMatrix) -> tuple[list[int], int]:
    """Diagonal of the Smith normal form of m, and its rank over Q.

    Returns (diagonal, rank) with diagonal = [d_1, ..., d_r], all positive,
    d_1 | d_2 | ... | d_r.  Transformation matrices are not tracked.

    Pivoting picks the minimal-absolute-value nonzero entry of the working
    submatrix; remainders of failed divisions become the new pivot, so
    entry growth stays tame.
    """
    a = m.tolists()
    rows, cols = m.rows, m.cols
    limit = min(rows, cols)
    t = 0
    while t < limit:
        pivot = _min_abs_entry(a, t, rows, cols)
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            a[t], a[pi] = a[pi], a[t]
        if pj != t:
            for r in a:
                r[t], r[pj] = r[pj], r[t]
        _clear_cross(a, t, rows, cols)
        t += 1
    diag = [abs(a[i][i]) for i in range(t)]
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            if diag[j] % diag[i]:
                g = math.gcd(diag[i], diag[j])
                diag[i], diag[j] = g, diag[i] * diag[j] // g
    return diag, t


def _min_abs_entry(a, t, rows, cols):
    best = None
    best_abs = None
    for i in range(t, rows):
        ai = a[i]
        for j in range(t, cols):
            v = ai[j]
            if v:
                av = -v if v < 0 else v
                if best_abs is None or av < best_abs:
                    best, best_abs = (i, j), av
                    if av == 1:
                        return best
    return best


def _clear_cross(a, t, rows, cols):
    """Row/column reduce until a[t][t] is the only nonzero in row/col t."""
    while True:
        p = a[t][t]
        restart = False
        for i in range(t + 1, rows):
            v = a[i][t]
            if v:
                q = v // p
                if q:
                    at = a[t]
                    ai = a[i]
                    for j in range(t, cols):
                        ai[j] -= q * at[j]
                if a[i][t]:
                    # remainder is smaller than |p|: promote it to pivot
                    a[t], a[i] = a[i], a[t]
                    restart = True
                    break
        if restart:
            continue
        for j in range(t + 1, cols):
            v = a[t][j]
            if v:
                q = v // p
                if q:
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                if a[t][j]:
                    for i in range(t, rows):
                        a[i][t], a[i][j] = a[i][j], a[i][t]
                    restart = True
                    break
        if not restart:
            return


@dataclass(frozen=True)
class FinAbGroup:
    """Finitely generated abelian group: invariant factors plus free rank.

    invariant_factors is the divisibility chain d_1 | d_2 | ..., every
    factor > 1 (unit factors are normalized away at construction).
    """

    invariant_factors: tuple[int, ...]
    free_rank: int

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be >= 0")
        object.__setattr__(
            self, "invariant_factors", tuple(int(d) for d in self.invariant_factors if d != 1)
        )
        prev = 1
        for d in self.invariant_factors:
            if d < 2:
                raise ValueError(f"invariant factor {d} < 2")
            if d % prev:
                raise ValueError(f"broken divisibility chain: {prev} does not divide {d}")
            prev = d

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.invariant_factors

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " + ".join(parts) if parts else "0"


@dataclass(frozen=True)
class TwoGroup:
    """Finite abelian 2-group as a descending list of exponents e_i,
    representing the direct sum of Z/2^(e_i).  Empty = trivial group."""

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(sorted((int(e) for e in self.exponents), reverse=True))
        if exps and exps[-1] < 1:
            raise ValueError("exponents must be positive")
        object.__setattr__(self, "exponents", exps)

    @property
    def is_trivial(self) -> bool:
        return not self.exponents

    @property
    def is_cyclic(self) -> bool:
        return len(self.exponents) <= 1

    @property
    def exponent(self) -> int:
        """log2 of the group exponent (0 for the trivial group)."""
        return self.exponents[0] if self.exponents else 0

    def __str__(self) -> str:
        if not self.exponents:
            return "0"
        return " + ".join(f"Z/{1 << e}" for e in self.exponents)


def cokernel(m: IntMatrix) -> FinAbGroup:
    """Abelian group presented by m: rows are relations on `cols` generators."""
    diag, rank = smith_normal_form(m)
    return FinAbGroup(tuple(d for d in diag if d > 1), m.cols - rank)


def qz_kernel(m: IntMatrix) -> FinAbGroup:
    """Kernel of the Q/Z-linear map (Q/Z)^cols -> (Q/Z)^rows with matrix m.

    Read off the Smith normal form: each invariant factor d contributes its
    d-torsion Z/d, and each pivotless column a full Q/Z summand.  The Q/Z
    summand count is stored in free_rank (the summands themselves are never
    materialized).
    """
    diag, rank = smith_normal_form(m)
    return FinAbGroup(tuple(d for d in diag if d > 1), m.cols - rank)


def two_primary(g: FinAbGroup) -> TwoGroup:
    """2-primary part of a finite group; rejects anything with free rank."""
    if g.free_rank != 0:
        raise ValueError(f"group has free rank {g.free_rank}; 2-primary part undefined here")
    exps = [nu(d).value for d in g.invariant_factors]
    return TwoGroup(tuple(e for e in exps if e > 0))
