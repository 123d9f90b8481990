import random

import pytest

from mahlerlab.cyclo import cyclotomic
from mahlerlab.intlinalg import bareiss_det
from mahlerlab.laurent import UniPoly
from mahlerlab.resultants import (
    res_with_x_pow_n_minus_1,
    resultant,
    sylvester_matrix,
    torsion_product,
    torsion_product_bruteforce,
)


class TestResultant:
    def test_linear_cases(self):
        # Res(t-2, t^2-1) = B(2) = 3
        assert resultant(UniPoly([-2, 1]), UniPoly([-1, 0, 1])) == 3

    def test_common_root_gives_zero(self):
        assert resultant(UniPoly([-1, 1]), UniPoly([-1, 1])) == 0

    def test_phi6_phi3(self):
        # Res(t^2-t+1, t^2+t+1) = 4: product of |1 + i sqrt3|^2 over conjugates
        assert resultant(UniPoly([1, -1, 1]), UniPoly([1, 1, 1])) == 4

    def test_zero_input_rejected(self):
        with pytest.raises(ValueError):
            resultant(UniPoly(()), UniPoly([1, 1]))

    def test_sign_convention(self):
        # Res(A, B) = lead(A)^deg B * prod B(alpha); A = t^2 - 1 has roots +-1
        a = UniPoly([-1, 0, 1])
        b = UniPoly([-3, 1])  # t - 3
        #  B(1) * B(-1) = (-2) * (-4) = 8
        assert resultant(a, b) == 8
        # antisymmetry up to (-1)^(deg A deg B)
        assert resultant(b, a) == (-1) ** (2 * 1) * 8

    def test_against_sylvester_oracle_random(self):
        rng = random.Random(20260810)
        for _ in range(50):
            a = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 6))])
            b = UniPoly([rng.randint(-5, 5) for _ in range(rng.randint(2, 6))])
            if a.degree() < 1 or b.degree() < 1:
                continue
            expected = bareiss_det(sylvester_matrix(a, b))
            assert resultant(a, b) == expected

    def test_multiplicativity(self):
        rng = random.Random(7)
        for _ in range(20):
            a = UniPoly([rng.randint(-4, 4) for _ in range(4)] + [rng.randint(1, 3)])
            b = UniPoly([rng.randint(-4, 4) for _ in range(3)] + [rng.randint(1, 3)])
            c = UniPoly([rng.randint(-4, 4) for _ in range(3)] + [rng.randint(1, 3)])
            assert resultant(a, b * c) == resultant(a, b) * resultant(a, c)


class TestResWithCircle:
    def test_x_minus_2(self):
        # prod (zeta - 2)... Res(x-2, x^N - 1) = 2^N - 1
        for n in (1, 2, 5, 10, 31):
            assert abs(res_with_x_pow_n_minus_1(UniPoly([-2, 1]), n)) == 2**n - 1

    def test_matches_direct_resultant(self):
        rng = random.Random(99)
        for _ in range(25):
            b = UniPoly([rng.randint(-4, 4) for _ in range(3)] + [rng.randint(1, 3)])
            n = rng.randint(1, 12)
            w = UniPoly([-1] + [0] * (n - 1) + [1])
            assert res_with_x_pow_n_minus_1(b, n) == resultant(b, w)

    def test_nonmonic(self):
        b = UniPoly([-1, 3])  # 3x - 1
        n = 4
        w = UniPoly([-1, 0, 0, 0, 1])
        assert res_with_x_pow_n_minus_1(b, n) == resultant(b, w)


class TestTorsionProduct:
    def test_x_minus_2(self):
        tp = torsion_product(UniPoly([-2, 1]), 10)
        assert tp.value == 2**10 - 1
        assert tp.zero_count == 0

    def test_x_minus_1_gives_n(self):
        # derivative identity: prod_{zeta != 1} (zeta - 1) = +-N
        for n in (2, 3, 7, 12, 100):
            tp = torsion_product(UniPoly([-1, 1]), n)
            assert tp.value == n
            assert tp.zero_orders == {1: 1}

    def test_trefoil_pattern(self):
        phi6 = UniPoly([1, -1, 1])
        # N = 6: primitive 6th roots vanish; remaining product is 12
        tp = torsion_product(phi6, 6)
        assert tp.zero_orders == {6: 1}
        assert tp.value == 12

    def test_skip_order_one(self):
        # figure-eight at N = 2: |Delta(-1)| = 5
        delta = UniPoly([1, -3, 1])
        tp = torsion_product(delta, 2, skip_order_one=True)
        assert tp.value == 5
        # N = 3: Res(t^2-3t+1, t^2+t+1) = 16
        assert torsion_product(delta, 3, skip_order_one=True).value == 16

    def test_against_bruteforce_random(self):
        rng = random.Random(31337)
        trials = 0
        while trials < 40:
            coeffs = [rng.randint(-3, 3) for _ in range(rng.randint(2, 5))]
            a = UniPoly(coeffs)
            if a.is_zero or a.degree() < 1:
                continue
            n = rng.randint(1, 16)
            skip = rng.random() < 0.5
            tp = torsion_product(a, n, skip_order_one=skip)
            expected, zeros = torsion_product_bruteforce(a, n, skip_order_one=skip)
            assert tp.value == expected, (a, n, skip)
            trials += 1

    def test_all_points_excluded(self):
        # A = x - 1 over mu_1 with zeta=1 skipped: empty product
        tp = torsion_product(UniPoly([-1, 1]), 1, skip_order_one=True)
        assert tp.value == 1

    def test_multiplicity(self):
        a = UniPoly([-1, 1]) ** 2 * UniPoly([-2, 1])
        tp = torsion_product(a, 6)
        expected, _ = torsion_product_bruteforce(a, 6)
        assert tp.value == expected
        assert tp.zero_orders == {1: 2}


class TestIntLinalg:
    def test_bareiss_det(self):
        assert bareiss_det([[0, 1], [1, 1]]) == -1
        assert bareiss_det([[2, 0], [0, 3]]) == 6
        assert bareiss_det([[1, 2], [2, 4]]) == 0

    def test_bareiss_vs_permutation(self):
        rng = random.Random(5)
        import itertools

        for _ in range(15):
            n = rng.randint(1, 4)
            m = [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
            # Leibniz formula oracle
            total = 0
            for perm in itertools.permutations(range(n)):
                sign = 1
                for i in range(n):
                    for j in range(i + 1, n):
                        if perm[i] > perm[j]:
                            sign = -sign
                prod = 1
                for i in range(n):
                    prod *= m[i][perm[i]]
                total += sign * prod
            assert bareiss_det(m) == total

    def test_smith_normal_form(self):
        from mahlerlab.intlinalg import mat_mul, smith_normal_form

        rng = random.Random(17)
        for _ in range(25):
            rows = rng.randint(1, 4)
            cols = rng.randint(1, 4)
            m = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
            u, s, v = smith_normal_form(m)
            # U M V = S
            assert mat_mul(mat_mul(u, m), v) == s
            # diagonal, nonnegative, divisibility chain
            diag = [s[i][i] for i in range(min(rows, cols))]
            for i in range(rows):
                for j in range(cols):
                    if i != j:
                        assert s[i][j] == 0
            for i in range(len(diag) - 1):
                if diag[i] and diag[i + 1]:
                    assert diag[i + 1] % diag[i] == 0
                if diag[i] == 0:
                    assert diag[i + 1] == 0
            # unimodularity
            assert abs(bareiss_det(u)) == 1
            assert abs(bareiss_det(v)) == 1

    def test_kernel_basis(self):
        from mahlerlab.intlinalg import kernel_basis

        m = [[1, 2, 0], [0, 0, 3]]
        basis = kernel_basis(m)
        assert len(basis) == 1
        v = basis[0]
        assert v[0] * 1 + v[1] * 2 == 0 and v[2] * 3 == 0
        # saturated: the generator must be primitive
        import math

        assert math.gcd(math.gcd(abs(v[0]), abs(v[1])), abs(v[2])) == 1

    def test_lll_finds_planted_short_vector(self):
        from mahlerlab.intlinalg import lll_reduce

        # plant (1, -1, 0) = b1 - 7*b2 inside a skewed basis
        b2 = [4, 9, 2]
        b3 = [3, 1, 5]
        b1 = [1 + 7 * b2[0], -1 + 7 * b2[1], 0 + 7 * b2[2]]
        red = lll_reduce([b1, b2, b3])
        norms = sorted(sum(x * x for x in row) for row in red)
        # LLL guarantee: first norm^2 <= 2^(n-1) * lambda_1^2 = 4 * 2
        assert norms[0] <= 8

    def test_lll_two_dim_exact(self):
        from mahlerlab.intlinalg import lll_reduce

        red = lll_reduce([[201, 37], [1648, 297]])
        norms = sorted(sum(x * x for x in row) for row in red)
        # the lattice has determinant -1279; (1, 32) is a shortest vector
        assert norms[0] == 1025

    def test_lll_preserves_lattice_membership(self):
        from mahlerlab.intlinalg import lll_reduce

        rng = random.Random(23)
        basis = [[rng.randint(-9, 9) for _ in range(4)] for _ in range(3)]
        # ensure independence by construction
        basis[0][0] += 20
        basis[1][1] += 20
        basis[2][2] += 20
        red = lll_reduce(basis)
        # the reduced vectors lie in the original lattice: solve with Fractions
        from fractions import Fraction

        for vec in red:
            # solve c * basis = vec by Gaussian elimination over Q
            a = [[Fraction(basis[i][j]) for i in range(3)] for j in range(4)]
            b = [Fraction(x) for x in vec]
            # least squares not needed; the system is consistent: do elimination
            rows = [a[j] + [b[j]] for j in range(4)]
            piv = 0
            for col in range(3):
                sel = None
                for r in range(piv, 4):
                    if rows[r][col] != 0:
                        sel = r
                        break
                if sel is None:
                    continue
                rows[piv], rows[sel] = rows[sel], rows[piv]
                rows[piv] = [x / rows[piv][col] for x in rows[piv]]
                for r in range(4):
                    if r != piv and rows[r][col] != 0:
                        f = rows[r][col]
                        rows[r] = [x - f * y for x, y in zip(rows[r], rows[piv])]
                piv += 1
            sol = [Fraction(0)] * 3
            seen = 0
            for col in range(3):
                sol[col] = rows[col][3] if col < len(rows) else Fraction(0)
            # all residual rows must vanish and solutions be integers
            for r in range(piv, 4):
                assert rows[r][3] == 0
            for x in sol:
                assert x.denominator == 1
