"""Bernoulli numbers, Hurwitz/Riemann zeta, log-gamma."""

import math
import random
from fractions import Fraction

import pytest

from asmpadic import _kernels, special

PI = math.pi


class TestBernoulli:
    def test_small_values(self):
        table = special.bernoulli_numbers(3)
        assert table.values == (Fraction(1), Fraction(-1, 2), Fraction(1, 6))

    def test_b4(self):
        assert special.bernoulli_numbers(5)[4] == Fraction(-1, 30)

    def test_b1_convention(self):
        assert special.bernoulli_numbers(2)[1] == Fraction(-1, 2)

    def test_known_prefix(self):
        known = [
            Fraction(1),
            Fraction(-1, 2),
            Fraction(1, 6),
            Fraction(0),
            Fraction(-1, 30),
            Fraction(0),
            Fraction(1, 42),
            Fraction(0),
            Fraction(-1, 30),
            Fraction(0),
            Fraction(5, 66),
            Fraction(0),
            Fraction(-691, 2730),
        ]
        assert list(special.bernoulli_numbers(13).values) == known

    def test_count_limits(self):
        with pytest.raises(ValueError):
            special.bernoulli_numbers(0)
        with pytest.raises(ValueError):
            special.bernoulli_numbers(special.MAX_BERNOULLI + 1)
        assert len(special.bernoulli_numbers(special.MAX_BERNOULLI)) == 64


class TestRiemannZeta:
    def test_zeta_2(self):
        z = special.riemann_zeta(2.0)
        assert abs(z - PI**2 / 6.0) <= 1e-12 * abs(z)

    def test_zeta_0(self):
        assert abs(special.riemann_zeta(0.0) - (-0.5)) <= 1e-13

    def test_zeta_minus_1(self):
        assert abs(special.riemann_zeta(-1.0) - (-1.0 / 12.0)) <= 1e-13

    def test_pole(self):
        with pytest.raises(ValueError, match="pole"):
            special.riemann_zeta(1.0)


class TestHurwitzZeta:
    def test_zeta_0_alpha(self):
        for i in range(1, 11):
            a = i / 10.0
            assert abs(special.hurwitz_zeta(0.0, a) - (0.5 - a)) <= 1e-13

    def test_periodicity_reduction(self):
        # -1/3 reduces to 2/3 (up to the 1-ulp argument difference)
        z1 = special.hurwitz_zeta(2.0, -1.0 / 3.0)
        z2 = special.hurwitz_zeta(2.0, 2.0 / 3.0)
        assert abs(z1 - z2) <= 1e-12 * abs(z2)

    def test_periodicity_same_path(self):
        # dyadic shifts reduce to bit-identical arguments
        for s in (2.0 + 0j, complex(0.5, 77.7), complex(-0.5, 13.0)):
            for a in (0.25, 0.5, 0.75, 1.0):
                assert special.hurwitz_zeta(s, a) == special.hurwitz_zeta(s, a + 1.0)
                assert special.hurwitz_zeta(s, a) == special.hurwitz_zeta(s, a - 3.0)

    def test_integer_alpha_is_riemann(self):
        for a in (-2.0, 0.0, 1.0, 5.0):
            assert special.hurwitz_zeta(2.5, a) == special.riemann_zeta(2.5)

    def test_multiplication_theorem_spot(self):
        s = 2.0 + 0j
        lhs = (
            special.hurwitz_zeta(s, 1.0 / 3.0)
            + special.hurwitz_zeta(s, 2.0 / 3.0)
            + special.riemann_zeta(s)
        )
        rhs = 3.0**s * special.riemann_zeta(s)
        assert abs(lhs - rhs) <= 1e-12 * abs(rhs)

    def test_multiplication_theorem_random(self):
        rng = random.Random(411)
        for _ in range(100):
            s = complex(rng.uniform(-0.5, 3.0), rng.uniform(-500.0, 500.0))
            if abs(s - 1.0) < 1e-3:
                continue
            lhs = (
                special.hurwitz_zeta(s, 1.0 / 3.0)
                + special.hurwitz_zeta(s, 2.0 / 3.0)
                + special.riemann_zeta(s)
            )
            rhs = 3.0**s * special.riemann_zeta(s)
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)

    def test_conjugate_symmetry(self):
        rng = random.Random(412)
        for _ in range(100):
            s = complex(rng.uniform(-0.5, 3.0), rng.uniform(0.1, 500.0))
            for a in (1.0 / 3.0, 2.0 / 3.0, 1.0):
                z = special.hurwitz_zeta(s, a)
                zc = special.hurwitz_zeta(s.conjugate(), a)
                assert abs(zc - z.conjugate()) <= 1e-10 * abs(z)

    def test_direct_series_agreement(self):
        # EM value vs literal 1e6-term partial sum plus the elementary
        # integral tail (the truncated tail alone is ~1e-6, far above the
        # tolerance, so the brute-force side carries its own 3-term
        # asymptotic estimate -- plain math, no reuse of the EM engine).
        s = 2.0 + 0j
        m = 1_000_000
        for a in (1.0 / 3.0, 2.0 / 3.0, 1.0):
            partial = _kernels.power_sum(a, s, m)
            x0 = m + a
            tail = x0 ** (1.0 - s) / (s - 1.0) + 0.5 * x0 ** (-s) + s * x0 ** (
                -s - 1.0
            ) / 12.0
            direct = partial + tail
            em = special.hurwitz_zeta(s, a)
            assert abs(em - direct) <= 1e-9 * abs(em)

    def test_cutoff_doubling_stable(self):
        for s in (2.0 + 0j, complex(0.25, 99.0), complex(-0.5, 50.0), complex(3.0, 7.0)):
            a = 1.0 / 3.0
            m = special._em_cutoff(s.imag)
            z1 = special._euler_maclaurin(complex(s), a, m)
            z2 = special._euler_maclaurin(complex(s), a, 2 * m)
            assert abs(z1 - z2) <= 1e-12 * abs(z2)

    def test_pole_and_envelope(self):
        with pytest.raises(ValueError, match="pole"):
            special.hurwitz_zeta(1.0, 0.5)
        with pytest.warns(special.AccuracyWarning):
            special.hurwitz_zeta(complex(0.0, 5001.0), 0.5)


class TestLogGammaReal:
    def test_anchors(self):
        assert abs(special.log_gamma_real(1.0)) <= 1e-12
        assert abs(special.log_gamma_real(2.0)) <= 1e-12
        assert abs(special.log_gamma_real(0.5) - math.log(math.sqrt(PI))) <= 1e-12

    def test_reflection(self):
        lhs = special.log_gamma_real(1.0 / 3.0) + special.log_gamma_real(2.0 / 3.0)
        assert abs(lhs - math.log(2.0 * PI / math.sqrt(3.0))) <= 1e-12

    def test_recurrence(self):
        # log Gamma(x+1) = log Gamma(x) + log x
        for x in (0.3, 1.7, 9.2, 24.5):
            lhs = special.log_gamma_real(x + 1.0)
            rhs = special.log_gamma_real(x) + math.log(x)
            assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(rhs))

    def test_rejects_nonpositive(self):
        for bad in (0.0, -1.0, -0.5):
            with pytest.raises(ValueError):
                special.log_gamma_real(bad)
