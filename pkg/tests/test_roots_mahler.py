import math

import mpmath
import pytest

from mahlerlab.laurent import LaurentPoly, UniPoly
from mahlerlab.mahler import (
    convergence_table,
    mahler_quadrature,
    torsion_average,
    truncated_average,
)
from mahlerlab.roots import FLAGGED, ON_CIRCLE, OUTSIDE, mahler_d1, roots_certified

LEHMER = UniPoly([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
GOLDEN_LIKE = UniPoly([1, -3, 1])  # roots (3 +- sqrt5)/2
M_GOLDEN_LIKE = math.log((3 + math.sqrt(5)) / 2)  # 0.9624236501192069


def lp(text, dim=None):
    return LaurentPoly.parse(text, dim=dim)


class TestRootsCertified:
    def test_quadratic(self):
        encs = roots_certified(GOLDEN_LIKE, 128)
        moduli = sorted(0.5 * (e.abs_interval()[0] + e.abs_interval()[1]) for e in encs)
        assert abs(moduli[0] - (3 - math.sqrt(5)) / 2) < 1e-12
        assert abs(moduli[1] - (3 + math.sqrt(5)) / 2) < 1e-12
        locs = sorted(e.location for e in encs)
        assert locs == ["inside", "outside"]

    def test_cyclotomic_removed_exactly(self):
        encs = roots_certified(UniPoly([1, 0, 1]), 64)  # t^2 + 1 = Phi_4
        assert all(e.location == ON_CIRCLE and e.unit_order == 4 for e in encs)
        assert len(encs) == 2

    def test_lehmer_poly(self):
        encs = roots_certified(LEHMER, 192)
        outside = [e for e in encs if e.location == OUTSIDE]
        flagged = [e for e in encs if e.location == FLAGGED]
        assert len(outside) == 1
        lo, hi = outside[0].abs_interval()
        assert lo <= 1.17628081825991751 <= hi
        # Lehmer's polynomial is a Salem polynomial: 8 conjugates exactly on
        # the circle can never be separated, only flagged
        assert len(flagged) == 8

    def test_multiplicity(self):
        f = UniPoly([-2, 1]) ** 2 * UniPoly([-1, 1])
        encs = roots_certified(f, 96)
        mults = sorted((e.multiplicity, e.location) for e in encs)
        assert (2, "outside") in mults

    def test_zero_root(self):
        f = UniPoly([0, 0, -2, 1])  # x^2 (x - 2)
        encs = roots_certified(f, 96)
        zero = [e for e in encs if e.multiplicity == 2]
        assert len(zero) == 1 and zero[0].location == "inside"


class TestMahlerD1:
    def test_linear(self):
        assert abs(mahler_d1(UniPoly([-2, 1])) - math.log(2)) < 1e-13

    def test_cyclotomic_exactly_zero(self):
        assert mahler_d1(UniPoly([1, -1, 1])) == 0.0
        assert mahler_d1(UniPoly([1, 1, 1]) * UniPoly([1, 0, 1])) == 0.0

    def test_quadratic(self):
        assert abs(mahler_d1(GOLDEN_LIKE) - M_GOLDEN_LIKE) < 1e-12

    def test_lehmer(self):
        # smallest known Salem number
        assert abs(mahler_d1(LEHMER) - math.log(1.176280818259917506)) < 1e-11

    def test_content_contributes(self):
        assert abs(mahler_d1(UniPoly([3])) - math.log(3)) < 1e-15
        assert abs(mahler_d1(UniPoly([-6, 3]) ) - (math.log(3) + math.log(2))) < 1e-12

    def test_multiplicativity(self):
        a = GOLDEN_LIKE
        b = UniPoly([-2, 1])
        assert abs(mahler_d1(a * b) - mahler_d1(a) - mahler_d1(b)) < 1e-10


class TestQuadrature:
    def test_constant(self):
        est, spread = mahler_quadrature(lp("7"), resolution=64)
        assert est == pytest.approx(math.log(7), abs=1e-12)
        assert spread == 0.0

    def test_x_minus_1(self):
        est, spread = mahler_quadrature(lp("x - 1"), resolution=1024)
        assert abs(est) < 1e-3

    def test_engine_agreement_d1(self):
        for text in ("x - 2", "x^2 - 3*x + 1", "2*x^2 + x + 3"):
            p = lp(text)
            est, spread = mahler_quadrature(p, resolution=2048)
            exact = mahler_d1(p.to_unipoly())
            assert abs(est - exact) < 5e-3 + spread

    def test_smyth_value_d2(self):
        # m(1 + x + y) = 0.3230659472... (Smyth); quadrature should land close
        est, spread = mahler_quadrature(lp("1 + x1 + x2"), resolution=512)
        assert abs(est - 0.3230659472) < 5e-3

    def test_monomial_invariance(self):
        p = lp("1 + x1 + x2")
        q = p * LaurentPoly.monomial(2, (3, -2), 1)
        e1, _ = mahler_quadrature(p, resolution=256)
        e2, _ = mahler_quadrature(q, resolution=256)
        assert abs(e1 - e2) < 1e-9


class TestTorsionAverage:
    def test_x_minus_1_identity(self):
        # prod_{zeta != 1} (1 - zeta) = N, so A_N = log(N)/N
        for n in (2, 7, 100, 5000):
            assert torsion_average(lp("x - 1"), n) == pytest.approx(
                math.log(n) / n, abs=1e-14
            )

    def test_x_minus_2_identity(self):
        for n in (3, 10, 40):
            assert torsion_average(lp("x - 2"), n) == pytest.approx(
                math.log(2**n - 1) / n, abs=1e-14
            )

    def test_cross_check_with_jensen(self):
        a_n = torsion_average(lp("x^2 - 3*x + 1"), 500)
        assert abs(a_n - M_GOLDEN_LIKE) < 2e-2

    def test_d2_sweep_route(self):
        # brute-force oracle at N = 12 with mpmath
        p = lp("1 + x1 + x2")
        a_n = torsion_average(p, 12)
        with mpmath.workdps(40):
            total = mpmath.mpf(0)
            for a in range(12):
                for b in range(12):
                    v = 1 + mpmath.e ** (2j * mpmath.pi * a / 12) + mpmath.e ** (
                        2j * mpmath.pi * b / 12
                    )
                    if abs(v) > 1e-20:
                        total += mpmath.log(abs(v))
            expected = float(total / 144)
        assert abs(a_n - expected) < 1e-5

    def test_monomial_invariance(self):
        p = lp("1 + x1 + x2")
        q = p * LaurentPoly.monomial(2, (-1, 2), -1)
        assert torsion_average(p, 9) == pytest.approx(torsion_average(q, 9), abs=1e-12)


class TestTruncatedAverage:
    def test_tail_empty(self):
        rep = truncated_average(lp("x - 1"), 8, 10.0)
        assert rep.tail_points == ()
        assert rep.tail_mass == 0.0
        assert rep.identity_exact
        assert rep.bulk == pytest.approx(math.log(8) / 8, abs=1e-9)

    def test_identity_with_nonempty_tail(self):
        # x - 1 at N = 100 with a small cutoff: the points near zeta = 1 fall
        # in the tail
        rep = truncated_average(lp("x - 1"), 100, 0.5)
        assert len(rep.tail_points) > 0
        assert rep.identity_exact
        assert rep.a_n == pytest.approx(math.log(100) / 100, abs=1e-6)
        assert rep.a_n == pytest.approx(rep.bulk - rep.tail_mass / 100, abs=1e-12)

    def test_bulk_monotone_in_t(self):
        p = lp("1 + x1 + x2")
        b1 = truncated_average(p, 30, 0.5).bulk
        b2 = truncated_average(p, 30, 1.5).bulk
        b3 = truncated_average(p, 30, 15.0).bulk
        assert b1 >= b2 >= b3

    def test_zero_points_excluded(self):
        rep = truncated_average(lp("1 + x1 + x2"), 3, 5.0)
        assert rep.zero_count == 2


class TestConvergenceTable:
    def test_x_minus_1_gaps(self):
        recs = convergence_table(lp("x - 1"), [10, 100, 1000])
        gaps = [abs(r.gap) for r in recs]
        assert gaps == sorted(gaps, reverse=True)
        assert recs[0].target == 0.0
        assert recs[2].gap == pytest.approx(math.log(1000) / 1000, abs=1e-12)

    def test_x_minus_2_exponential(self):
        recs = convergence_table(lp("x - 2"), [8, 16, 32])
        for r in recs:
            assert abs(r.gap) <= 2.0 ** -r.n * 1.01

    def test_d2(self):
        recs = convergence_table(lp("1 + x1 + x2"), [30, 60], quadrature_resolution=512)
        assert abs(recs[-1].gap) < 5e-2
        assert recs[0].aux["zero_count"] == 2
