"""Grid verification of the combinatorial identities behind the relations.

Every identity that the closed-form coefficients rest on is checked
exhaustively on a desk-scale parameter grid, in exact arithmetic: the
generating-function zero identity, the inverse/product structure of the
relation matrices, the partial-row-sum evaluations, two hypergeometric
summation identities, the power-series symmetry, and the vanishing identity
that truncates the hand-calculation expansions.

Each check returns an IdentityReport; a single counterexample fails the
check and is reported with its full parameters.

Note on conventions: the relation matrices M and N are built with the
second binomial term subtracted, i.e.

    M_{i,j} = (-1)^(i+j) (C(2n+1, j-i) - C(2n+1, j+i-2n-1)),

which is the row-normalized coefficient matrix of the defining relations;
the matrix identities below hold exactly in this form.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import IntSeries, binom, sigma


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check over a parameter grid."""

    name: str
    grid: str
    cases: int
    passed: bool
    counterexample: str | None = None

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = "" if self.passed else f"  [{self.counterexample}]"
        return f"{status} {self.name} ({self.grid}; {self.cases} cases){tail}"


def _sgn(e: int) -> int:
    return 1 if e % 2 == 0 else -1


def _report(name: str, grid: str, cases: int, counterexample: str | None) -> IdentityReport:
    return IdentityReport(name, grid, cases, counterexample is None, counterexample)


def check_zero_identity(max_m: int, n: int) -> IdentityReport:
    """sum_{j=0}^{m} (-1)^j d_j c_{m-j} = 0 for m >= 1,
    with c_i = C(2n+1, i) and d_i = C(2n+i, i)."""
    bad = None
    cases = 0
    for m in range(1, max_m + 1):
        cases += 1
        s = sum(_sgn(j) * binom(2 * n + j, j) * binom(2 * n + 1, m - j) for j in range(m + 1))
        if s != 0:
            bad = f"m={m}, n={n}: sum={s}"
            break
    return _report("zero-identity", f"1<=m<={max_m}, n={n}", cases, bad)


def _relation_matrix(n: int) -> list[list[int]]:
    """Rows of the n upper defining relations on xi_{2n}..xi_1 (descending),
    normalized to unit diagonal."""
    return [
        [
            _sgn(i + j) * (binom(2 * n + 1, j - i) - binom(2 * n + 1, j + i - 2 * n - 1))
            for j in range(1, 2 * n + 1)
        ]
        for i in range(1, n + 1)
    ]


def _solve_unitriangular(t: list[list[int]], u: list[list[int]]) -> list[list[int]]:
    """Exact X with T X = U for upper unitriangular T."""
    nn = len(t)
    mm = len(u[0]) if u else 0
    x = [[0] * mm for _ in range(nn)]
    for i in range(nn - 1, -1, -1):
        if t[i][i] != 1:
            raise ValueError(f"matrix is not unitriangular at row {i}")
        for c in range(mm):
            acc = u[i][c]
            for k in range(i + 1, nn):
                if t[i][k]:
                    acc -= t[i][k] * x[k][c]
            x[i][c] = acc
    return x


def _dc_product(n: int) -> list[list[int]]:
    """sum_{j=1}^{n} D_j C_j with D_j[t] = d_{n+1-t-j} - d_{n+j-t} and
    C_j[t] = (-1)^(t-j) c_{t-j}."""
    d = lambda i: binom(2 * n + i, i)
    c = lambda i: binom(2 * n + 1, i)
    out = [[0] * n for _ in range(n)]
    for j in range(1, n + 1):
        col = [d(n + 1 - t - j) - d(n + j - t) for t in range(1, n + 1)]
        for t in range(n):
            if col[t]:
                for s in range(j, n + 1):
                    out[t][s - 1] += col[t] * _sgn(s - j) * c(s - j)
    return out


def check_dcsum(n: int) -> IdentityReport:
    """M_L is upper unitriangular, M_L^{-1} has entries d_{j-i}, and
    M_L^{-1} M_R = sum_j D_j C_j."""
    m = _relation_matrix(n)
    ml = [row[:n] for row in m]
    mr = [row[n:] for row in m]
    bad = None
    for i in range(n):
        for j in range(n):
            if j < i and ml[i][j] != 0:
                bad = f"M_L[{i + 1}][{j + 1}]={ml[i][j]} below diagonal"
            if j == i and ml[i][j] != 1:
                bad = f"M_L diagonal at {i + 1} is {ml[i][j]}"
    if bad is None:
        dmat = [[binom(2 * n + j - i, j - i) for j in range(1, n + 1)] for i in range(1, n + 1)]
        prod = [
            [sum(ml[i][k] * dmat[k][j] for k in range(n)) for j in range(n)] for i in range(n)
        ]
        if prod != [[1 if i == j else 0 for j in range(n)] for i in range(n)]:
            bad = f"M_L * (d_(j-i)) is not the identity at n={n}"
    if bad is None:
        w = _solve_unitriangular(ml, mr)
        if w != _dc_product(n):
            bad = f"M_L^-1 M_R != sum D_j C_j at n={n}"
    return _report("dcsum", f"n={n}", 1, bad)


def _b2_vector(n: int) -> tuple[list[int], list[int]]:
    """The doubled-index start vector on xi_{2n}..xi_1, split (left | right)."""
    p = [0] * (2 * n)
    for j in range(n):
        p[2 * j] = _sgn(n + 1 + j) * sigma(j, n)
    return p[:n], p[n:]


def alternating_row_power(n: int) -> int:
    """C(2n+1,n) - C(2n+1,n-1) - C(2n+1,n-2) + C(2n+1,n-3) + ... with the
    sign pattern +,-,-,+ of period 4; equals 2^n."""
    pattern = (1, -1, -1, 1)
    return sum(pattern[i % 4] * binom(2 * n + 1, n - i) for i in range(n + 1))


def check_pd(n: int) -> IdentityReport:
    """Partial-row-sum evaluation of the eliminated doubled-index vector.

    For odd n = 2e+1 asserts, for 1 <= j <= n,

      -P_L D_j = (-1)^[(j-1)/2] 2^n
                 + sum_{u=1}^{[j/2]} (-1)^(e+u+1) sigma_{e+u} d_{j-2u};

    for every n (odd or even) asserts the downstream consequence that
    P_R - P_L M_L^{-1} M_R equals both the +,+,-,- sign-pattern vector
    scaled by (-1)^(n+1) 2^n and its partial-row-sum coefficient form; and
    asserts the alternating row identity = 2^n.
    """
    d = lambda i: binom(2 * n + i, i)
    pl, pr = _b2_vector(n)
    bad = None
    cases = 0
    if n % 2 == 1:
        e = (n - 1) // 2
        for j in range(1, n + 1):
            cases += 1
            dj = [d(n + 1 - t - j) - d(n + j - t) for t in range(1, n + 1)]
            lhs = -sum(a * b for a, b in zip(pl, dj))
            rhs = _sgn((j - 1) // 2) * (1 << n) + sum(
                _sgn(e + u + 1) * sigma(e + u, n) * d(j - 2 * u) for u in range(1, j // 2 + 1)
            )
            if lhs != rhs:
                bad = f"n={n}, j={j}: -P_L D_j = {lhs}, closed form {rhs}"
                break
    if bad is None:
        cases += 1
        m = _relation_matrix(n)
        w = _solve_unitriangular([r[:n] for r in m], [r[n:] for r in m])
        eliminated = [pr[t] - sum(pl[i] * w[i][t] for i in range(n)) for t in range(n)]
        pattern = (1, 1, -1, -1)
        vec = [0] * n
        for j in range(n):
            coef = _sgn(j) * binom(2 * n + 1, j)
            for t in range(j, n):
                vec[t] += coef * pattern[(t - j) % 4]
        vec = [_sgn(n + 1) * (v << n) for v in vec]
        if eliminated != vec:
            bad = f"n={n}: eliminated vector differs from sign-pattern form"
        else:
            coeff_form = []
            for t in range(1, n + 1):
                k = n + 1 - t
                col4 = 0
                i = n - 1 - k
                while i >= 0:
                    col4 += binom(2 * n + 2, i)
                    i -= 4
                coeff_form.append(_sgn(k + 1) * ((sigma(n - k, n) - 2 * col4) << n))
            if eliminated != coeff_form:
                bad = f"n={n}: eliminated vector differs from coefficient form"
    if bad is None:
        cases += 1
        if alternating_row_power(n) != 1 << n:
            bad = f"n={n}: alternating row sum is {alternating_row_power(n)}, not 2^{n}"
    return _report("pd", f"n={n}", cases, bad)


def check_afor(max_n: int, a_range) -> IdentityReport:
    """sum_j (-1)^j C(n-j,j) 4^(n-2j) C(2j-1, j-A)
       = (-1)^A sum_t C(2n+2, n-2A-4t), on 0 <= n <= max_n, A in a_range."""
    bad = None
    cases = 0
    a_values = list(a_range)
    for n in range(max_n + 1):
        for a in a_values:
            cases += 1
            lhs = sum(
                _sgn(j) * binom(n - j, j) * 4 ** (n - 2 * j) * binom(2 * j - 1, j - a)
                for j in range(n // 2 + 1)
            )
            rhs = 0
            i = n - 2 * a
            while i >= 0:
                rhs += binom(2 * n + 2, i)
                i -= 4
            if lhs != _sgn(a) * rhs:
                bad = f"n={n}, A={a}: lhs={lhs}, rhs={_sgn(a) * rhs}"
                break
        if bad:
            break
    return _report("afor", f"n<={max_n}, A in {a_values[0]}..{a_values[-1]}", cases, bad)


def check_binomlem(max_n: int, vw_range) -> IdentityReport:
    """sum_s (-1)^s C(n+s-1-w, s) C(3n-w, 2n-s) C(3n-s+v, 2n) = C(4n-w+v, 2n)
    for 0 <= n <= max_n and v, w in vw_range (the s-sum stops at s = 2n)."""
    bad = None
    cases = 0
    vw = list(vw_range)
    for n in range(max_n + 1):
        for v in vw:
            for w in vw:
                cases += 1
                lhs = sum(
                    _sgn(s) * binom(n + s - 1 - w, s) * binom(3 * n - w, 2 * n - s) * binom(3 * n - s + v, 2 * n)
                    for s in range(2 * n + 1)
                )
                if lhs != binom(4 * n - w + v, 2 * n):
                    bad = f"n={n}, v={v}, w={w}: lhs={lhs}, rhs={binom(4 * n - w + v, 2 * n)}"
                    break
            if bad:
                break
        if bad:
            break
    return _report("binomlem", f"n<={max_n}, v,w in {vw[0]}..{vw[-1]}", cases, bad)


def check_sym(max_m: int, max_j: int) -> IdentityReport:
    """Coefficient symmetry of f_m(x) = (1-x+x^2)^(m+1)/(1-x^3):

      coef(x^(m-j-1)) + coef(x^(m+j)) = (1+2(-2)^m)/3     (j = 0,2 mod 3)
                                        (1+2(-2)^(m+1))/3 (j = 1 mod 3).
    """
    bad = None
    cases = 0
    for m in range(max_m + 1):
        t = m + max_j + 1
        f = (IntSeries.of([1, -1, 1], t) ** (m + 1)).exact_div(IntSeries.of([1, 0, 0, -1], t))
        for j in range(max_j + 1):
            cases += 1
            got = f.coef(m - j - 1) + f.coef(m + j)
            want = (1 + 2 * (-2) ** m) // 3 if j % 3 in (0, 2) else (1 + 2 * (-2) ** (m + 1)) // 3
            if got != want:
                bad = f"m={m}, j={j}: got {got}, want {want}"
                break
        if bad:
            break
    return _report("sym", f"m<={max_m}, j<={max_j}", cases, bad)


def check_vanishing(max_j: int) -> IdentityReport:
    """sum_{t=0}^{j-2} (-1)^t C(2j-1,t) (2j-2t-1) C(j-t,2)^i = 0
    for 3 <= j <= max_j and 1 <= i <= j-2."""
    bad = None
    cases = 0
    for j in range(3, max_j + 1):
        for i in range(1, j - 1):
            cases += 1
            s = sum(
                _sgn(t) * binom(2 * j - 1, t) * (2 * j - 2 * t - 1) * binom(j - t, 2) ** i
                for t in range(j - 1)
            )
            if s != 0:
                bad = f"j={j}, i={i}: sum={s}"
                break
        if bad:
            break
    return _report("vanishing", f"3<=j<={max_j}", cases, bad)


def check_q2_reduction(n: int) -> IdentityReport:
    """Matrix route for the tripled-index reduction against its closed form.

    Builds the 2n x 3n relation matrix on xi_{3n}..xi_1, reduces the
    tripled-index start vector Q = (Q_0|Q_1|Q_2) to
    Q_2' = Q_2 - Q_0(B_2 - B_1 W) - Q_1 W, and compares entrywise with

      (-1)^n ( (2^(2n+1)+1)/3 * (-s_0, s_1, -s_2, ...)
               + 2^(2n+1) * (0, -c_0, c_1, -c_2, c_3+c_0, ...) ),

    where s_t is the partial row sum and the second vector accumulates
    c_j over j = t-1 mod 3.  Also cross-checks W against sum D_j C_j.
    """
    if n < 2:
        raise ValueError("q2 reduction needs n >= 2")
    bad = None
    nmat = [[0] * (3 * n) for _ in range(2 * n)]
    for i in range(1, 2 * n + 1):
        for j in range(1, 3 * n + 1):
            if i <= n:
                nmat[i - 1][j - 1] = _sgn(j - i) * binom(3 * n + 1 - i, j - i)
            else:
                nmat[i - 1][j - 1] = _sgn(i + j) * (
                    binom(2 * n + 1, j - i) - binom(2 * n + 1, j + i - 4 * n - 1)
                )
    if any(v != 0 for row in nmat[n:] for v in row[:n]):
        bad = "lower-left block of the relation matrix is not zero"
    if bad is None:
        t1 = [row[:n] for row in nmat[:n]]
        u1 = [row[n : 2 * n] for row in nmat[:n]]
        u2 = [row[2 * n :] for row in nmat[:n]]
        t2 = [row[n : 2 * n] for row in nmat[n:]]
        u3 = [row[2 * n :] for row in nmat[n:]]
        b1 = _solve_unitriangular(t1, u1)
        b2 = _solve_unitriangular(t1, u2)
        w = _solve_unitriangular(t2, u3)
        if w != _dc_product(n):
            bad = f"n={n}: W block differs from sum D_j C_j"
    if bad is None:
        q = [0] * (3 * n)
        for j in range(n):
            q[3 * j] = _sgn(n + 1 + j) * sigma(j, n)
        q0, q1, q2 = q[:n], q[n : 2 * n], q[2 * n :]
        b1w = [[sum(b1[i][k] * w[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        inner = [[b2[i][j] - b1w[i][j] for j in range(n)] for i in range(n)]
        q2p = [
            q2[t]
            - sum(q0[i] * inner[i][t] for i in range(n))
            - sum(q1[i] * w[i][t] for i in range(n))
            for t in range(n)
        ]
        unit = ((1 << (2 * n + 1)) + 1) // 3
        c = lambda i: binom(2 * n + 1, i)
        closed = []
        for t in range(n):
            acc = 0
            i = t - 1
            while i >= 0:
                acc += c(i)
                i -= 3
            closed.append(_sgn(n) * (unit * _sgn(t + 1) * sigma(t, n) + (1 << (2 * n + 1)) * _sgn(t) * acc))
        if q2p != closed:
            bad = f"n={n}: reduced vector {q2p} differs from closed form {closed}"
    return _report("q2-reduction", f"n={n}", 1, bad)


def check_basis_involution(n_value: int, max_degree: int) -> IdentityReport:
    """The change of basis B_j = sum_k (-1)^(k+1) C(N, j-k) xi_k and its
    series inverse xi_k = (-1)^(k+1) sum_j C(-N, k-j) B_j compose to the
    identity on coefficients up to max_degree (N = n_value)."""
    bad = None
    big_n = n_value
    t = max_degree + 1
    forward = [[_sgn(k + 1) * binom(big_n, j - k) for k in range(1, t)] for j in range(1, t)]
    inverse = [[_sgn(k + 1) * binom(-big_n, k - j) for j in range(1, t)] for k in range(1, t)]
    cases = 0
    for k in range(t - 1):
        for i in range(t - 1):
            cases += 1
            got = sum(inverse[k][j] * forward[j][i] for j in range(t - 1))
            if got != (1 if k == i else 0):
                bad = f"N={big_n}: composite[{k + 1}][{i + 1}] = {got}"
                break
        if bad:
            break
    return _report("basis-involution", f"N={big_n}, degree<={max_degree}", cases, bad)


def run_identity_suite(
    *,
    zero_max_m: int = 60,
    zero_max_n: int = 10,
    dcsum_max_n: int = 12,
    pd_max_n: int = 13,
    pow2_max_n: int = 60,
    afor_max_n: int = 40,
    afor_a: int = 10,
    binomlem_max_n: int = 12,
    binomlem_vw: int = 6,
    sym_max: int = 60,
    vanishing_max_j: int = 16,
    q2_min_n: int = 3,
    q2_max_n: int = 8,
    involution_degree: int = 30,
) -> list[IdentityReport]:
    """The full identity battery at (configurable) acceptance grid sizes."""
    reports = []
    for n in range(1, zero_max_n + 1):
        reports.append(check_zero_identity(zero_max_m, n))
    for n in range(1, dcsum_max_n + 1):
        reports.append(check_dcsum(n))
    for n in range(1, pd_max_n + 1):
        reports.append(check_pd(n))
    bad = None
    for n in range(1, pow2_max_n + 1):
        if alternating_row_power(n) != 1 << n:
            bad = f"n={n}"
            break
    reports.append(_report("pow2-alternating", f"n<={pow2_max_n}", pow2_max_n, bad))
    reports.append(check_afor(afor_max_n, range(-afor_a, afor_a + 1)))
    reports.append(check_binomlem(binomlem_max_n, range(-binomlem_vw, binomlem_vw + 1)))
    reports.append(check_sym(sym_max, sym_max))
    reports.append(check_vanishing(vanishing_max_j))
    for n in range(q2_min_n, q2_max_n + 1):
        reports.append(check_q2_reduction(n))
    for big_n in (7, 9, 11):
        reports.append(check_basis_involution(big_n, involution_degree))
    return reports
