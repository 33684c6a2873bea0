"""Ground-truth integer arithmetic: digit sums, valuations, oracles."""

import math

import numpy as np
import pytest

from asmpadic import exact

TEST_PRIMES = [2, 3, 5, 7, 11, 13]


def vp_of_product_oracle(p: int, n: int) -> int:
    """Independent oracle: build T(n) from factorials and divide out p."""
    t = 1
    for j in range(n):
        t *= math.factorial(3 * j + 1)
    for j in range(n):
        t //= math.factorial(n + j)
    k = 0
    while t % p == 0:
        k += 1
        t //= p
    return k


class TestPrime:
    def test_accepts_primes(self):
        for p in TEST_PRIMES + [101, 1009]:
            assert exact.Prime(p).value == p

    def test_rejects_composites_and_small(self):
        for bad in (-1, 0, 1, 4, 9, 15, 1001):
            with pytest.raises(ValueError):
                exact.Prime(bad)

    def test_rejects_non_integers(self):
        with pytest.raises(TypeError):
            exact.Prime(7.0)

    def test_residue_mod_3(self):
        assert exact.Prime(3).residue_mod_3 == 0
        assert exact.Prime(7).residue_mod_3 == 1
        assert exact.Prime(5).residue_mod_3 == 2


class TestDigitSum:
    def test_examples(self):
        assert exact.digit_sum(2, 5) == 2  # 101 in base 2
        assert exact.digit_sum(3, 10) == 2  # 101 in base 3
        assert exact.digit_sum(2, 0) == 0

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            exact.digit_sum(2, -1)

    def test_matches_digit_expansion(self):
        for p in TEST_PRIMES:
            for n in range(0, 2000, 7):
                digits = []
                m = n
                while m:
                    digits.append(m % p)
                    m //= p
                assert exact.digit_sum(p, n) == sum(digits)


class TestVp:
    def test_examples(self):
        assert exact.vp(2, 8) == 3
        assert exact.vp(5, 7) == 0
        assert exact.vp(3, 54) == 3  # 54 = 2 * 27

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            exact.vp(2, 0)

    def test_definition(self):
        for p in (2, 5):
            for m in range(1, 3000):
                k = exact.vp(p, m)
                assert m % p**k == 0
                assert m % p ** (k + 1) != 0


class TestVpFactorial:
    def test_examples(self):
        assert exact.vp_factorial(2, 10) == 8  # 5 + 2 + 1
        assert exact.vp_factorial(3, 10) == 4  # 3 + 1
        assert exact.vp_factorial(7, 6) == 0

    def test_two_forms_agree_scalar(self):
        for p in TEST_PRIMES:
            for m in list(range(0, 500)) + [99_998, 99_999, 100_000]:
                assert exact.vp_factorial(p, m) == exact.vp_factorial_digit_form(p, m)

    def test_two_forms_agree_full_range(self):
        # floor-sum form via cumulative valuations vs digit-sum form, m <= 1e5
        from asmpadic import _kernels

        limit = 100_001
        for p in TEST_PRIMES:
            floor_form = np.cumsum(_kernels.valuation_table(p, limit))
            m = np.arange(limit, dtype=np.int64)
            digit_form = (m - _kernels.digit_sum_table(p, limit)) // (p - 1)
            assert np.array_equal(floor_form, digit_form)

    def test_against_factorial(self):
        for p in (2, 3, 7):
            for m in range(1, 60):
                assert exact.vp_factorial(p, m) == exact.vp(p, math.factorial(m))
            assert exact.vp_factorial(p, 0) == 0


class TestAsmCount:
    def test_known_values(self):
        # 1, 1, 2, 7, 42, 429, 7436: the classic ASM counting sequence
        assert [exact.asm_count(n) for n in range(7)] == [1, 1, 2, 7, 42, 429, 7436]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            exact.asm_count(-1)


class TestVpAsmOracles:
    def test_derived_examples(self):
        # expected values computed with the factorial-product oracle above
        cases = [
            (2, 2, 1),  # T(2) = 2
            (7, 3, 1),  # T(3) = 7
            (5, 1, 0),  # T(1) = 1
            (3, 4, 1),  # T(4) = 42 = 2*3*7
            (11, 1, 0),
            (2, 4, 1),
            (13, 4, 0),
        ]
        for p, n, expected in cases:
            assert vp_of_product_oracle(p, n) == expected
            assert exact.vp_asm_digit_sum(p, n) == expected
            assert exact.vp_asm_legendre(p, n) == expected
            assert exact.vp_asm_bignum(p, n) == expected

    def test_triple_agreement_small(self):
        for p in TEST_PRIMES:
            for n in range(0, 31):
                a = exact.vp_asm_digit_sum(p, n)
                assert a == exact.vp_asm_legendre(p, n)
                assert a == exact.vp_asm_bignum(p, n)

    def test_n_zero_convention(self):
        for p in (2, 7):
            assert exact.vp_asm_digit_sum(p, 0) == 0
            assert exact.vp_asm_legendre(p, 0) == 0
            assert exact.vp_asm_bignum(p, 0) == 0

    def test_valuations_nonnegative(self):
        vals = exact.vp_asm_range_digit_sum(2, 500)
        assert (vals >= 0).all()

    def test_bignum_cap(self):
        with pytest.raises(ValueError, match="too large"):
            exact.vp_asm_bignum(2, exact.BIGNUM_N_CAP + 1)


class TestRangeSweeps:
    def test_match_scalar_routes(self):
        for p in (2, 3, 7):
            dig = exact.vp_asm_range_digit_sum(p, 120)
            leg = exact.vp_asm_range_legendre(p, 120)
            for n in (1, 2, 3, 50, 119, 120):
                assert int(dig[n - 1]) == exact.vp_asm_digit_sum(p, n)
                assert int(leg[n - 1]) == exact.vp_asm_legendre(p, n)

    def test_routes_agree_to_2000(self):
        for p in TEST_PRIMES:
            dig = exact.vp_asm_range_digit_sum(p, 2000)
            leg = exact.vp_asm_range_legendre(p, 2000)
            assert np.array_equal(dig, leg)

    def test_p3_self_similarity_subset(self):
        vals = exact.vp_asm_range_digit_sum(3, 1500)
        for n in range(1, 501):
            assert int(vals[3 * n - 1]) == 3 * int(vals[n - 1])

    def test_sweep_cap_guard(self):
        with pytest.raises(ValueError, match="int64"):
            exact.vp_asm_range_digit_sum(2, exact.SWEEP_N_CAP + 1)

    def test_int64_headroom_bound(self):
        # digit-sum aggregates stay far inside int64 up to the sweep cap
        n = exact.SWEEP_N_CAP
        for p in TEST_PRIMES:
            digit_bound = 3 * n * (p - 1) * (math.log(4 * n, p) + 1)
            legendre_bound = (3 * n) ** 2 / (2 * (p - 1))
            assert max(digit_bound, legendre_bound) < 2**63 / 8


class TestPrefixDigitSum:
    def test_examples(self):
        assert exact.prefix_digit_sum(2, 4) == 4  # 0+1+1+2
        assert exact.prefix_digit_sum(3, 3) == 3  # 0+1+2
        assert exact.prefix_digit_sum(2, 0) == 0

    def test_matches_plain_loop(self):
        for p in (2, 5, 13):
            total = 0
            for n in range(700):
                assert exact.prefix_digit_sum(p, n) == total
                total += exact.digit_sum(p, n)


class TestStepIdentity:
    def test_examples(self):
        assert exact.digit_sum_step_identity(2, 8)
        assert exact.digit_sum_step_identity(5, 25)
        assert exact.digit_sum_step_identity(3, 7)

    def test_full_range(self):
        from asmpadic import _kernels

        limit = 100_001
        for p in TEST_PRIMES:
            s = _kernels.digit_sum_table(p, limit)
            v = _kernels.valuation_table(p, limit)
            lhs = s[1:] - s[:-1]
            assert np.array_equal(lhs, 1 - (p - 1) * v[1:])

    def test_scalar_sample(self):
        for p in TEST_PRIMES:
            for m in range(1, 500):
                assert exact.digit_sum_step_identity(p, m)
