#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the four hot kernels on representative workloads: digit-sum and
valuation tables (oracle sweeps), the Euler-Maclaurin power sum (zeta
evaluation inner loop), and the progression valuation series (the
brute-force Dirichlet oracle).

    python3 bench/benchmark_kernels.py [--repeat 5]
"""

from __future__ import annotations

import argparse
import math
import time

from asmpadic import _pykernels

try:
    from asmpadic import _ckernels
except ImportError:
    _ckernels = None


CASES = [
    ("digit_sum_table(p=2, 1e6)", lambda m: m.digit_sum_table(2, 1_000_000)),
    ("digit_sum_table(p=7, 1e6)", lambda m: m.digit_sum_table(7, 1_000_000)),
    ("valuation_table(p=2, 1e6)", lambda m: m.valuation_table(2, 1_000_000)),
    (
        "power_sum(1/3, 0.5+1500j, M=640) x200",
        lambda m: [
            m.power_sum(1.0 / 3.0, complex(0.5, 1500.0), 640) for _ in range(200)
        ],
    ),
    (
        "progression_series(p=2, j=1, s=2, 1e6)",
        lambda m: m.progression_valuation_series(2, 1, 2.0 + 0j, 1_000_000),
    ),
    (
        "progression_series(p=5, j=-1, s=2, 1e6)",
        lambda m: m.progression_valuation_series(5, -1, 2.0 + 0j, 1_000_000),
    ),
]


def best_of(fn, module, repeat: int) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(module)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="best-of repetitions")
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; only timing the numpy fallback")
    header = f"{'kernel':45s} {'pure (ms)':>10s} {'compiled (ms)':>14s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for name, fn in CASES:
        pure = best_of(fn, _pykernels, args.repeat)
        if _ckernels is None:
            print(f"{name:45s} {pure * 1e3:10.2f} {'-':>14s} {'-':>8s}")
            continue
        comp = best_of(fn, _ckernels, args.repeat)
        print(
            f"{name:45s} {pure * 1e3:10.2f} {comp * 1e3:14.2f} "
            f"{pure / comp:7.1f}x"
        )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
