"""Numpy implementations of the hot kernels.

These are the pure-Python fallback for the compiled extension in
``_ckernels``; both expose the same four functions with identical
semantics.  See ``_kernels`` for the import-time selection and
``bench/benchmark_kernels.py`` for a speed comparison.
"""

from __future__ import annotations

import numpy as np


def digit_sum_table(p: int, limit: int) -> np.ndarray:
    """Base-p digit sums S_p(n) for 0 <= n < limit, as an int64 array."""
    out = np.zeros(limit, dtype=np.int64)
    rem = np.arange(limit, dtype=np.int64)
    while rem.size and rem[-1] > 0:
        out += rem % p
        rem //= p
    return out


def valuation_table(p: int, limit: int) -> np.ndarray:
    """p-adic valuations v_p(n) for 0 <= n < limit (entry 0 is 0 by convention)."""
    out = np.zeros(limit, dtype=np.int64)
    step = p
    while step < limit:
        out[step::step] += 1
        step *= p
    return out


def power_sum(alpha: float, s: complex, count: int) -> complex:
    """sum_{n=0}^{count-1} (n + alpha)^(-s) for alpha > 0."""
    base = np.arange(count, dtype=np.float64) + alpha
    return complex(np.sum(base ** (-complex(s))))


def progression_valuation_series(p: int, j: int, s: complex, terms: int) -> complex:
    """Partial Dirichlet series sum_n v_p(3n + j) / (n + j/3)^s.

    Sums the first `terms` indices n, starting at n = 0 for j > 0 and
    n = 1 otherwise (so that 3n + j >= 1 and n + j/3 > 0 throughout).
    """
    n0 = 0 if j > 0 else 1
    n = np.arange(n0, n0 + terms, dtype=np.int64)
    q = 3 * n + j
    v = np.zeros(terms, dtype=np.int64)
    step = np.int64(p)
    top = int(q[-1]) if terms else 0
    while step <= top:
        v += q % step == 0
        step *= p
    base = n.astype(np.float64) + j / 3.0
    return complex(np.sum(v * base ** (-complex(s))))
