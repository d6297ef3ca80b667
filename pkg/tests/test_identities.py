from vone.exact import binom
from vone.identities import (
    IdentityReport,
    alternating_row_power,
    check_afor,
    check_basis_involution,
    check_binomlem,
    check_dcsum,
    check_pd,
    check_q2_reduction,
    check_sym,
    check_vanishing,
    check_zero_identity,
    run_identity_suite,
)


class TestZeroIdentity:
    def test_hand_values(self):
        # n=1, m=1: d_0 c_1 - d_1 c_0 = 3 - 3;  n=2, m=2: 10 - 25 + 15
        assert binom(2 + 1, 1) - binom(3, 1) * 1 == 0
        assert binom(5, 2) - binom(5, 1) * binom(5, 1) + binom(6, 2) == 0
        assert check_zero_identity(20, 1).passed
        assert check_zero_identity(20, 2).passed

    def test_case_counting(self):
        rep = check_zero_identity(15, 3)
        assert rep.cases == 15 and rep.counterexample is None


class TestMatrixChecks:
    def test_dcsum_small(self):
        for n in range(1, 8):
            assert check_dcsum(n).passed

    def test_pd_odd_and_even(self):
        for n in range(1, 9):
            assert check_pd(n).passed

    def test_pd_n1_value(self):
        # smallest odd case: -P_L D_1 = 2
        d0, d1 = binom(2, 0), binom(3, 1)
        pl = [1]  # (-1)^(1+1+0) sigma_0 at position 1 for n=1
        dj = [d0 - d1]
        assert -sum(a * b for a, b in zip(pl, dj)) == 2

    def test_alternating_row_power(self):
        assert alternating_row_power(1) == 2
        assert alternating_row_power(2) == 4
        assert alternating_row_power(3) == 8
        for n in range(1, 30):
            assert alternating_row_power(n) == 1 << n

    def test_q2_reduction(self):
        for n in range(3, 9):
            assert check_q2_reduction(n).passed


class TestSumChecks:
    def test_afor_base_cases(self):
        assert check_afor(0, range(-3, 4)).passed
        assert check_afor(12, range(-6, 7)).passed

    def test_binomlem(self):
        # n=1, v=w=0 evaluates to 9 - 3 + 0 = C(4,2)
        lhs = sum(
            (-1) ** s * binom(s, s) * binom(3, 2 - s) * binom(3 - s, 2) for s in range(3)
        )
        assert lhs == binom(4, 2) == 6
        assert check_binomlem(5, range(-4, 5)).passed

    def test_sym(self):
        assert check_sym(12, 12).passed
        # m=0: constant term of f_0 is 1, and j=1 branch gives -1
        assert (1 + 2 * (-2) ** 0) // 3 == 1
        assert (1 + 2 * (-2) ** 1) // 3 == -1

    def test_vanishing(self):
        # j=3, i=1: 15 - 15 = 0
        assert (
            binom(5, 0) * 5 * binom(3, 2) - binom(5, 1) * 3 * binom(2, 2) == 0
        )
        assert check_vanishing(10).passed


class TestInvolutionAndSuite:
    def test_basis_involution(self):
        for big_n in (5, 7, 9, 11):
            assert check_basis_involution(big_n, 20).passed

    def test_report_str(self):
        good = IdentityReport("demo", "n=1", 3, True)
        bad = IdentityReport("demo", "n=1", 3, False, "n=1: off by 2")
        assert str(good).startswith("PASS demo")
        assert "off by 2" in str(bad)

    def test_suite_small(self):
        reports = run_identity_suite(
            zero_max_m=10,
            zero_max_n=3,
            dcsum_max_n=4,
            pd_max_n=5,
            pow2_max_n=12,
            afor_max_n=8,
            afor_a=4,
            binomlem_max_n=4,
            binomlem_vw=3,
            sym_max=10,
            vanishing_max_j=8,
            q2_min_n=3,
            q2_max_n=4,
            involution_degree=12,
        )
        assert reports and all(r.passed for r in reports)
