"""Compiled extension vs numpy fallback: identical semantics."""

import numpy as np
import pytest

from asmpadic import _kernels, _pykernels

compiled = pytest.importorskip(
    "asmpadic._ckernels", reason="compiled kernels not built"
)


def test_dispatch_prefers_compiled():
    assert _kernels.COMPILED
    assert _kernels.backend() == "compiled"


def test_digit_sum_tables_identical():
    for p in (2, 3, 7, 13):
        for limit in (0, 1, 2, 1000, 65536):
            a = compiled.digit_sum_table(p, limit)
            b = _pykernels.digit_sum_table(p, limit)
            assert np.array_equal(a, b)


def test_valuation_tables_identical():
    for p in (2, 3, 5, 11):
        for limit in (0, 1, 2, 1000, 65536):
            a = compiled.valuation_table(p, limit)
            b = _pykernels.valuation_table(p, limit)
            assert np.array_equal(a, b)


def test_power_sum_agreement():
    for s in (2.0 + 0j, complex(0.5, 133.0), complex(-0.25, 900.0)):
        for alpha in (1.0 / 3.0, 2.0 / 3.0, 1.0):
            for count in (1, 32, 4096):
                a = compiled.power_sum(alpha, s, count)
                b = _pykernels.power_sum(alpha, s, count)
                assert abs(a - b) <= 1e-12 * max(1.0, abs(b))


def test_progression_series_agreement():
    for p in (2, 5):
        for j in (-1, 0, 1):
            a = compiled.progression_valuation_series(p, j, 2.0 + 0j, 50_000)
            b = _pykernels.progression_valuation_series(p, j, 2.0 + 0j, 50_000)
            assert abs(a - b) <= 1e-11 * max(1.0, abs(b))


def test_progression_series_start_index():
    # j > 0 starts at n = 0 (3n+j = 1 has valuation 0, so the first
    # contributing index differs between j branches)
    for impl in (compiled, _pykernels):
        one_term = impl.progression_valuation_series(2, -1, 2.0 + 0j, 1)
        assert abs(one_term - 1.0 / (1.0 - 1.0 / 3.0) ** 2) <= 1e-14  # v_2(2)=1 at n=1
