"""Integral Adams modules for the symplectic and spinor families.

Models PK^1(Sp(n)) on the basis xi_1..xi_n and PK^1(Spin(2n+1)) on
xi_1..xi_{n-1}, D, where the extra generator satisfies

    2^(n+1) D = sum_{k=1}^{n} (-1)^(k+1) sigma_{n-k} xi_k,

with sigma_j the partial row sum of C(2n+1, .).  Adams operations act by
psi^t xi_k = xi_{kt}; high xi-indices are rewritten into the basis through
the defining relations, each of which is +-xi_j plus lower terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .exact import binom, sigma
from .intlinalg import IntMatrix

SP = "sp"
SPIN = "spin"

V = "v"
VTILDE = "vtilde"


class IntegralityError(ArithmeticError):
    """A division that the theory guarantees to be exact was not."""


@dataclass(frozen=True)
class ModuleSpec:
    """Which lattice a xi-coordinate vector lives in.

    family "sp": basis xi_1..xi_n.  family "spin": basis xi_1..xi_{n-1}, D,
    with D in the last slot.  Both have rank n.
    """

    family: str
    n: int

    def __post_init__(self):
        if self.family not in (SP, SPIN):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == SP and self.n < 1:
            raise ValueError("sp requires n >= 1")
        if self.family == SPIN and self.n < 2:
            raise ValueError("spin requires n >= 2")

    @classmethod
    def sp(cls, n: int) -> "ModuleSpec":
        return cls(SP, n)

    @classmethod
    def spin(cls, n: int) -> "ModuleSpec":
        return cls(SPIN, n)

    @property
    def rank(self) -> int:
        return self.n


@dataclass(frozen=True)
class XiVector:
    """An element in xi-coordinates: xi_1..xi_{n-1}, then xi_n (sp) or D (spin)."""

    spec: ModuleSpec
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.spec.rank:
            raise ValueError(f"expected {self.spec.rank} coordinates, got {len(self.coords)}")


def xi_reduce(j: int, spec: ModuleSpec) -> XiVector:
    """Express the class xi_j in the basis of spec.

    For indices above the basis the relations R_j (n < j <= 2n) and S_j
    (j > 2n) are applied recursively, always eliminating the current top
    index; for the spin family xi_n is further traded for D via the
    defining relation of D.
    """
    if j < 1:
        raise ValueError("xi indices start at 1")
    return XiVector(spec, _reduce(spec.family, spec.n, j))


@lru_cache(maxsize=None)
def _reduce(family: str, n: int, j: int) -> tuple[int, ...]:
    top_basis = n if family == SP else n - 1
    if j <= top_basis:
        return tuple(1 if i == j - 1 else 0 for i in range(n))
    if family == SPIN and j == n:
        # xi_n = (-1)^(n+1) (2^(n+1) D + sum_{k<n} (-1)^k sigma_{n-k} xi_k)
        s = (-1) ** (n + 1)
        coords = [s * (-1) ** k * sigma(n - k, n) for k in range(1, n)]
        coords.append(s * (1 << (n + 1)))
        return tuple(coords)
    if j <= 2 * n:
        # R_j: xi_j = sum_{k<j} (-1)^(k+j+1) (C(2n+1, j-k) - C(2n+1, 2n+1-j-k)) xi_k
        terms = [
            (k, (-1) ** (k + j + 1) * (binom(2 * n + 1, j - k) - binom(2 * n + 1, 2 * n + 1 - j - k)))
            for k in range(1, j)
        ]
    else:
        # S_j: xi_j = sum_{k<j} (-1)^(j+k+1) C(j, k) xi_k
        terms = [(k, (-1) ** (j + k + 1) * binom(j, k)) for k in range(1, j)]
    acc = [0] * n
    for k, c in terms:
        if c == 0:
            continue
        sub = _reduce(family, n, k)
        for i in range(n):
            if sub[i]:
                acc[i] += c * sub[i]
    return tuple(acc)


def psi_matrix(t: int, spec: ModuleSpec) -> IntMatrix:
    """Matrix of the Adams operation psi^t on the basis of spec.

    Row i is the image of basis element i.  t = 1 gives the identity and
    t = -1 gives minus the identity (psi^{-1} acts as -1 on both families);
    any t >= 2 is computed by index rewriting.  For the spin family the
    D-row expands psi^t applied to the defining relation of D and divides
    by 2^(n+1); an inexact division raises IntegralityError (it would
    falsify the model and never fires).
    """
    if t == 1:
        return IntMatrix.identity(spec.rank)
    if t == -1:
        return IntMatrix.identity(spec.rank, -1)
    if t < 1:
        raise ValueError("t must be -1 or a positive integer")
    return IntMatrix(_psi_rows(spec.family, spec.n, t))


@lru_cache(maxsize=None)
def _psi_rows(family: str, n: int, t: int) -> tuple[tuple[int, ...], ...]:
    rows = []
    top_basis = n if family == SP else n - 1
    for k in range(1, top_basis + 1):
        rows.append(_reduce(family, n, k * t))
    if family == SPIN:
        rows.append(_psi_d_row(n, t))
    return tuple(rows)


def _psi_d_row(n: int, t: int) -> tuple[int, ...]:
    """psi^t(D) via psi^t(2^(n+1) D) = sum_k (-1)^(k+1) sigma_{n-k} xi_{kt}."""
    acc = [0] * n
    for k in range(1, n + 1):
        c = (-1) ** (k + 1) * sigma(n - k, n)
        sub = _reduce(SPIN, n, k * t)
        for i in range(n):
            if sub[i]:
                acc[i] += c * sub[i]
    den = 1 << (n + 1)
    for i, v in enumerate(acc):
        if v % den:
            raise IntegralityError(
                f"psi^{t}(2^{n + 1} D) has coordinate {v} not divisible by 2^{n + 1} (n={n})"
            )
        acc[i] = v // den
    return tuple(acc)


def presentation(m: int, spec: ModuleSpec, variant: str = V) -> IntMatrix:
    """Relation matrix presenting the weight-2m quotient of spec's module.

    Vertical stack of the blocks psi^2 (or psi^2 - 2^m for the "vtilde"
    variant), psi^3 - 3^m, and psi^{-1} - (-1)^m, each rank x rank.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if variant not in (V, VTILDE):
        raise ValueError(f"unknown variant {variant!r}")
    r = spec.rank
    block2 = psi_matrix(2, spec)
    if variant == VTILDE:
        block2 = block2 - IntMatrix.identity(r, 1 << m)
    block3 = psi_matrix(3, spec) - IntMatrix.identity(r, 3**m)
    sign = -1 if m % 2 else 1
    block_neg = psi_matrix(-1, spec) - IntMatrix.identity(r, sign)
    return IntMatrix.stack(block2, block3, block_neg)
