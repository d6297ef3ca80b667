import math
import random
from itertools import combinations

import pytest

from vone.intlinalg import (
    FinAbGroup,
    IntMatrix,
    TwoGroup,
    cokernel,
    qz_kernel,
    smith_normal_form,
    two_primary,
)


def det(rows):
    """Cofactor-expansion determinant; oracle use only."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j, head in enumerate(rows[0]):
        if head:
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            total += (-1) ** j * head * det(minor)
    return total


def snf_via_minor_gcds(mat: IntMatrix) -> list[int]:
    """Independent SNF oracle: d_k = D_k / D_(k-1) with D_k the gcd of all
    k x k minors (determinantal divisors)."""
    out = []
    prev = 1
    grid = mat.tolists()
    for k in range(1, min(mat.rows, mat.cols) + 1):
        g = 0
        for rs in combinations(range(mat.rows), k):
            for cs in combinations(range(mat.cols), k):
                g = math.gcd(g, det([[grid[i][j] for j in cs] for i in rs]))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def random_matrix(rng, max_dim=6, bound=20):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    return IntMatrix([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


class TestIntMatrix:
    def test_shapes_and_ops(self):
        a = IntMatrix([[1, 2], [3, 4]])
        assert a.shape == (2, 2)
        assert (a + a).row(0) == (2, 4)
        assert (a - a) == IntMatrix.zeros(2, 2)
        assert (2 * a).entry(1, 1) == 8
        assert (a @ IntMatrix.identity(2)) == a
        assert IntMatrix.stack(a, IntMatrix.zeros(1, 2)).rows == 3

    def test_rejects_ragged(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2], [3]])

    def test_transpose(self):
        a = IntMatrix([[1, 2, 3]])
        assert a.transpose() == IntMatrix([[1], [2], [3]])


class TestSmithNormalForm:
    def test_identity(self):
        assert smith_normal_form(IntMatrix.identity(2)) == ([1, 1], 2)

    def test_hand_example(self):
        assert smith_normal_form(IntMatrix([[2, 4], [6, 8]])) == ([2, 4], 2)

    def test_zero_matrix(self):
        assert smith_normal_form(IntMatrix.zeros(3, 2)) == ([], 0)

    def test_divisibility_chain(self):
        rng = random.Random(5)
        for _ in range(200):
            diag, rank = smith_normal_form(random_matrix(rng))
            assert len(diag) == rank
            for a, b in zip(diag, diag[1:]):
                assert b % a == 0

    def test_against_minor_gcd_oracle(self):
        rng = random.Random(6)
        for _ in range(150):
            mat = random_matrix(rng, max_dim=5, bound=9)
            diag, _rank = smith_normal_form(mat)
            assert diag == snf_via_minor_gcds(mat)

    def test_invariant_under_permutation_and_signs(self):
        rng = random.Random(7)
        for _ in range(80):
            mat = random_matrix(rng)
            rows = mat.tolists()
            rng.shuffle(rows)
            rows = [[-x for x in r] if rng.random() < 0.5 else r for r in rows]
            cols = list(zip(*rows))
            rng.shuffle(cols)
            shuffled = IntMatrix([list(r) for r in zip(*cols)]) if cols else mat
            assert smith_normal_form(shuffled) == smith_normal_form(mat)

    def test_huge_entries_stay_exact(self):
        big = 3**400
        diag, rank = smith_normal_form(IntMatrix([[big, 0], [0, 2]]))
        assert diag == [1, 2 * big] and rank == 2
        diag2, _ = smith_normal_form(IntMatrix([[3 * big, 0], [0, 6]]))
        assert diag2 == [3, 6 * big]


class TestCokernel:
    def test_examples(self):
        assert cokernel(IntMatrix([[2, 0]])) == FinAbGroup((2,), 1)
        assert cokernel(IntMatrix.zeros(0, 3)) == FinAbGroup((), 3)
        assert cokernel(IntMatrix([[1]])) == FinAbGroup((), 0)

    def test_zero_rows_are_harmless(self):
        rng = random.Random(8)
        for _ in range(60):
            mat = random_matrix(rng, max_dim=4)
            padded = IntMatrix.stack(mat, IntMatrix.zeros(2, mat.cols))
            assert cokernel(padded) == cokernel(mat)


class TestQzKernel:
    def test_examples(self):
        assert qz_kernel(IntMatrix([[6]])) == FinAbGroup((6,), 0)
        assert qz_kernel(IntMatrix([[0]])) == FinAbGroup((), 1)

    def test_duality_against_cokernel(self):
        rng = random.Random(9)
        for _ in range(200):
            mat = random_matrix(rng)
            k = qz_kernel(mat)
            g = cokernel(mat)
            assert k.invariant_factors == g.invariant_factors
            assert k.free_rank == g.free_rank


class TestGroups:
    def test_finabgroup_normalizes_units(self):
        g = FinAbGroup((1, 1, 2, 6), 0)
        assert g.invariant_factors == (2, 6)

    def test_finabgroup_rejects_broken_chain(self):
        with pytest.raises(ValueError):
            FinAbGroup((4, 6), 0)
        with pytest.raises(ValueError):
            FinAbGroup((2,), -1)

    def test_str(self):
        assert str(FinAbGroup((2, 4), 1)) == "Z/2 + Z/4 + Z"
        assert str(FinAbGroup((), 0)) == "0"
        assert str(TwoGroup((3, 1))) == "Z/8 + Z/2"
        assert str(TwoGroup(())) == "0"

    def test_two_primary_examples(self):
        assert two_primary(FinAbGroup((2, 12), 0)) == TwoGroup((2, 1))
        assert two_primary(FinAbGroup((3, 9), 0)) == TwoGroup(())
        assert two_primary(FinAbGroup((8,), 0)) == TwoGroup((3,))

    def test_two_primary_rejects_free_rank(self):
        with pytest.raises(ValueError):
            two_primary(FinAbGroup((2,), 1))

    def test_twogroup_sorts_descending(self):
        assert TwoGroup((1, 3, 2)).exponents == (3, 2, 1)
        assert TwoGroup((4,)).is_cyclic
        assert TwoGroup(()).exponent == 0
        with pytest.raises(ValueError):
            TwoGroup((0,))
