"""Exact integer ground truth.

Digit sums, factorial valuations, and the p-adic valuation of the
alternating-sign-matrix counting function

    T(n) = prod_{j=0}^{n-1} (3j+1)! / (n+j)!

by three mutually independent routes: the digit-sum identity

    v_p(T(n)) = (sum_{j<n} S_p(n+j) - sum_{j<n} S_p(3j+1)) / (p-1),

Legendre floor sums over the factorial ratios, and (for small n) direct
factorization of the exact big integer.  Everything here is checked
integer arithmetic; this module is the oracle side for `analytic`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import _kernels

__all__ = [
    "BIGNUM_N_CAP",
    "SWEEP_N_CAP",
    "Prime",
    "asm_count",
    "digit_sum",
    "digit_sum_step_identity",
    "ensure_prime",
    "is_prime",
    "prefix_digit_sum",
    "vp",
    "vp_asm_bignum",
    "vp_asm_digit_sum",
    "vp_asm_legendre",
    "vp_asm_range_digit_sum",
    "vp_asm_range_legendre",
    "vp_factorial",
    "vp_factorial_digit_form",
]

#: Largest n accepted by the big-integer oracle; T(30) already has a few
#: hundred digits and the Legendre route covers everything beyond.
BIGNUM_N_CAP = 30

#: Largest n accepted by the int64 range sweeps.  Below this every digit-sum
#: aggregate provably fits in 64 bits: the cumulative floor-sum table is
#: bounded by (3n)^2 / (2(p-1)) <= 4.5e14 and the digit-sum aggregates by
#: 3n (p-1) log_p(4n) <= 1e9, both far under 2^63.
SWEEP_N_CAP = 10_000_000


def is_prime(n: int) -> bool:
    """Primality by trial division (intended for small moduli)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Prime:
    """A prime modulus, validated by trial division at construction."""

    value: int

    def __post_init__(self) -> None:
        if not isinstance(self.value, int) or isinstance(self.value, bool):
            raise TypeError(f"prime must be an integer, got {self.value!r}")
        if not is_prime(self.value):
            raise ValueError(f"{self.value} is not prime")

    def __int__(self) -> int:
        return self.value

    @property
    def residue_mod_3(self) -> int:
        """value mod 3: 0 exactly for p = 3, else 1 or 2."""
        return self.value % 3


@lru_cache(maxsize=None)
def _checked_prime(value: int) -> int:
    return Prime(value).value


def ensure_prime(p: int | Prime) -> int:
    """Validate p and return it as a plain int."""
    if isinstance(p, Prime):
        return p.value
    return _checked_prime(p)


def digit_sum(p: int | Prime, n: int) -> int:
    """Sum of the base-p digits of n; 0 for n = 0."""
    pv = ensure_prime(p)
    if n < 0:
        raise ValueError("digit_sum requires n >= 0")
    total = 0
    while n:
        total += n % pv
        n //= pv
    return total


def vp(p: int | Prime, m: int) -> int:
    """Largest k with p^k dividing m; rejects m = 0 (valuation infinite)."""
    pv = ensure_prime(p)
    if m == 0:
        raise ValueError("v_p(0) is infinite")
    m = abs(m)
    k = 0
    while m % pv == 0:
        k += 1
        m //= pv
    return k


def vp_factorial(p: int | Prime, m: int) -> int:
    """v_p(m!) via the Legendre floor sum sum_{i>=1} floor(m / p^i)."""
    pv = ensure_prime(p)
    if m < 0:
        raise ValueError("vp_factorial requires m >= 0")
    total = 0
    while m:
        m //= pv
        total += m
    return total


def vp_factorial_digit_form(p: int | Prime, m: int) -> int:
    """v_p(m!) as (m - S_p(m)) / (p - 1); cross-check of vp_factorial."""
    pv = ensure_prime(p)
    if m < 0:
        raise ValueError("vp_factorial_digit_form requires m >= 0")
    q, r = divmod(m - digit_sum(pv, m), pv - 1)
    if r:
        raise ArithmeticError("m - S_p(m) is not divisible by p - 1 (bug)")
    return q


def asm_count(n: int) -> int:
    """T(n), the number of n x n alternating sign matrices, exactly.

    T(0) = 1 (empty product).
    """
    if n < 0:
        raise ValueError("asm_count requires n >= 0")
    num = 1
    den = 1
    for j in range(n):
        num *= math.factorial(3 * j + 1)
        den *= math.factorial(n + j)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError("T(n) came out non-integral (bug)")
    return q


def vp_asm_digit_sum(p: int | Prime, n: int) -> int:
    """v_p(T(n)) via base-p digit sums.

    Raises ArithmeticError if the digit-sum combination is not divisible
    by p - 1, which would indicate an implementation bug (the division is
    exact for every valid input).
    """
    pv = ensure_prime(p)
    if n < 0:
        raise ValueError("vp_asm_digit_sum requires n >= 0")
    total = sum(digit_sum(pv, n + j) for j in range(n))
    total -= sum(digit_sum(pv, 3 * j + 1) for j in range(n))
    q, r = divmod(total, pv - 1)
    if r:
        raise ArithmeticError(
            "digit-sum combination not divisible by p - 1 (bug)"
        )
    return q


def vp_asm_legendre(p: int | Prime, n: int) -> int:
    """v_p(T(n)) via Legendre floor sums, independent of digit sums."""
    pv = ensure_prime(p)
    if n < 0:
        raise ValueError("vp_asm_legendre requires n >= 0")
    total = sum(vp_factorial(pv, 3 * j + 1) for j in range(n))
    return total - sum(vp_factorial(pv, n + j) for j in range(n))


def vp_asm_bignum(p: int | Prime, n: int) -> int:
    """v_p(T(n)) by factoring p out of the exact integer T(n).

    Third oracle; capped at n <= BIGNUM_N_CAP because T(n) grows like
    exp(c n^2) and repeated division gets slow beyond a few hundred digits.
    """
    pv = ensure_prime(p)
    if n > BIGNUM_N_CAP:
        raise ValueError(
            f"vp_asm_bignum accepts n <= {BIGNUM_N_CAP} (T(n) too large); "
            "use vp_asm_legendre or vp_asm_digit_sum instead"
        )
    t = asm_count(n)
    k = 0
    while t % pv == 0:
        k += 1
        t //= pv
    return k


def prefix_digit_sum(p: int | Prime, n: int) -> int:
    """sum_{m=0}^{n-1} S_p(m) by direct summation (no closed form).

    This is the brute-force side of the Delange comparison; the closed
    form lives in `analytic`.
    """
    pv = ensure_prime(p)
    if n < 0:
        raise ValueError("prefix_digit_sum requires n >= 0")
    if n > 3 * SWEEP_N_CAP:
        raise ValueError(f"prefix_digit_sum supports n <= {3 * SWEEP_N_CAP}")
    if n == 0:
        return 0
    return int(_kernels.digit_sum_table(pv, n).sum())


def digit_sum_step_identity(p: int | Prime, m: int) -> bool:
    """Check S_p(m) - S_p(m-1) == 1 - (p-1) v_p(m) for m >= 1."""
    pv = ensure_prime(p)
    if m < 1:
        raise ValueError("digit_sum_step_identity requires m >= 1")
    lhs = digit_sum(pv, m) - digit_sum(pv, m - 1)
    return lhs == 1 - (pv - 1) * vp(pv, m)


def _check_sweep_bounds(pv: int, n_max: int) -> None:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    if n_max > SWEEP_N_CAP:
        raise ValueError(
            f"range sweeps support n_max <= {SWEEP_N_CAP}; aggregates are "
            "no longer guaranteed to fit in int64 beyond that"
        )


def vp_asm_range_digit_sum(p: int | Prime, n_max: int) -> np.ndarray:
    """v_p(T(n)) for n = 1..n_max via cumulative digit sums (int64 array).

    Same digit-sum route as vp_asm_digit_sum, evaluated incrementally:
    sum_{j<n} S_p(n+j) is a difference of prefix sums of the S_p table.
    """
    pv = ensure_prime(p)
    _check_sweep_bounds(pv, n_max)
    table = _kernels.digit_sum_table(pv, 3 * n_max - 1)
    prefix = np.concatenate(([0], np.cumsum(table)))
    n = np.arange(1, n_max + 1)
    upper = prefix[2 * n] - prefix[n]
    lower = np.cumsum(table[1 : 3 * n_max - 1 : 3])
    q, r = np.divmod(upper - lower, pv - 1)
    if r.any():
        raise ArithmeticError(
            "digit-sum combination not divisible by p - 1 (bug)"
        )
    return q


def vp_asm_range_legendre(p: int | Prime, n_max: int) -> np.ndarray:
    """v_p(T(n)) for n = 1..n_max via Legendre floor sums (int64 array).

    Uses v_p(m!) = cumulative sum of v_p(m); shares no tables with the
    digit-sum sweep.
    """
    pv = ensure_prime(p)
    _check_sweep_bounds(pv, n_max)
    fact = np.cumsum(_kernels.valuation_table(pv, 3 * n_max - 1))
    prefix = np.concatenate(([0], np.cumsum(fact)))
    n = np.arange(1, n_max + 1)
    upper = prefix[2 * n] - prefix[n]
    lower = np.cumsum(fact[1 : 3 * n_max - 1 : 3])
    return lower - upper
