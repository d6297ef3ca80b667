"""Exact computation of v1-periodic K-theory 1-line groups.

Computes the weight-2m quotients of the primitive K-cohomology Adams
modules of Sp(n) and Spin(2n+1) by four independent methods, and verifies
the combinatorial identities the closed forms rest on.
"""

from .adams import (
    SP,
    SPIN,
    V,
    VTILDE,
    IntegralityError,
    ModuleSpec,
    XiVector,
    presentation,
    psi_matrix,
    xi_reduce,
)
from .exact import INFINITY, InexactDivisionError, IntSeries, Valuation, binom, nu, r_sp, s_full, s_odd, sigma
from .groups import (
    ALGORITHM,
    CLOSED,
    ORACLE,
    RELATIONS,
    WINDOWED,
    RelationPair,
    TableRow,
    VGroupResult,
    comb_relations,
    esp,
    fast_r1_coef,
    fast_r2_coef,
    residue_row,
    table,
    v_group,
    v_spin_algorithm,
    v_spin_closed,
    v_spin_oracle,
    v_spin_relations,
)
from .identities import IdentityReport, run_identity_suite
from .intlinalg import FinAbGroup, IntMatrix, TwoGroup, cokernel, qz_kernel, smith_normal_form, two_primary

__version__ = "0.1.0"

__all__ = [
    "ALGORITHM",
    "CLOSED",
    "FinAbGroup",
    "INFINITY",
    "IdentityReport",
    "InexactDivisionError",
    "IntMatrix",
    "IntSeries",
    "IntegralityError",
    "ModuleSpec",
    "ORACLE",
    "RELATIONS",
    "RelationPair",
    "SP",
    "SPIN",
    "TableRow",
    "TwoGroup",
    "V",
    "VGroupResult",
    "VTILDE",
    "Valuation",
    "WINDOWED",
    "XiVector",
    "binom",
    "cokernel",
    "comb_relations",
    "esp",
    "fast_r1_coef",
    "fast_r2_coef",
    "nu",
    "presentation",
    "psi_matrix",
    "qz_kernel",
    "r_sp",
    "residue_row",
    "run_identity_suite",
    "s_full",
    "s_odd",
    "sigma",
    "smith_normal_form",
    "table",
    "two_primary",
    "v_group",
    "v_spin_algorithm",
    "v_spin_closed",
    "v_spin_oracle",
    "v_spin_relations",
    "xi_reduce",
]
