#!/usr/bin/env python3
"""Regenerate tests/golden/acceptance.json.

The frozen constants are empirical artifacts of the truncated Fourier
series (the analytic theory gives only O-bounds for them): the maximum
truncation residual of the p = 3 expansion, the residual/(sqrt(n) log n)
ratio constants for p = 2 and p = 7, and the coefficient-decay envelope
fit.  Bounds carry a regression margin over the measured values; the
measured values are stored alongside for transparency.

Run from the repository root:

    python3 tools/freeze_golden.py
"""

from __future__ import annotations

import json
import math
import warnings
from pathlib import Path

import asmpadic as ap

OUT = Path(__file__).resolve().parent.parent / "tests" / "golden" / "acceptance.json"

#: Regression margin on maxima that are deterministic re-measurements
#: (same grid, same code path); covers cross-platform libm drift.
TIGHT_MARGIN = 1.25
#: Margin on sup-statistics of oscillating quantities over sparse grids.
LOOSE_MARGIN = 2.0


def geometric_grid(lo: int, hi: int, points: int) -> list[int]:
    ratio = (hi / lo) ** (1.0 / (points - 1))
    grid = sorted({round(lo * ratio**i) for i in range(points)})
    grid[-1] = hi
    return grid


def p3_truncation_residual(order: int, n_max: int = 200) -> float:
    vals = ap.vp_asm_range_digit_sum(3, n_max)
    coeffs = ap.fourier_coefficients(3, order)
    slope = ap.main_slope(3)
    l3 = math.log(3)
    return max(
        abs(int(vals[n - 1]) / n - slope - ap.phi_eval(math.log(n) / l3, coeffs))
        for n in range(1, n_max + 1)
    )


def end_to_end_ratio(p: int, grid: list[int], order: int = 400) -> float:
    coeffs = ap.fourier_coefficients(p, order)
    vals = ap.vp_asm_range_digit_sum(p, max(grid))
    worst = 0.0
    for n in grid:
        dec = ap.valuation_expansion(n, coeffs)
        residual = int(vals[n - 1]) - dec.total
        worst = max(worst, abs(residual) / (math.sqrt(n) * math.log(n)))
    return worst


def coeff_envelope_fit(p: int, k_max: int = 1000) -> float:
    fit = 0.0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", ap.AccuracyWarning)
        for k in range(1, k_max + 1):
            fit = max(fit, abs(ap.phi_coeff(k, p)) * k**1.5 / (1.0 + math.log(k)))
    return fit


def main() -> None:
    grid = geometric_grid(100, 10_000, 25)
    m400 = p3_truncation_residual(400)
    m200 = p3_truncation_residual(200)
    r2 = end_to_end_ratio(2, grid)
    r7 = end_to_end_ratio(7, grid)
    fit = coeff_envelope_fit(2)
    doc = {
        "note": "frozen empirical constants; regenerate with tools/freeze_golden.py",
        "p3_exactness": {
            "order": 400,
            "half_order": 200,
            "n_max": 200,
            "measured_max_residual": m400,
            "max_residual_bound": m400 * TIGHT_MARGIN,
            "half_order_measured_max_residual": m200,
        },
        "end_to_end": {
            "order": 400,
            "grid": grid,
            "p2_measured_ratio": r2,
            "p2_ratio_bound": r2 * LOOSE_MARGIN,
            "p7_measured_ratio": r7,
            "p7_ratio_bound": r7 * LOOSE_MARGIN,
        },
        "coeff_envelope": {
            "p2_fit_k1000": fit,
            "documented_cap": 3.0,
        },
    }
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(doc, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {OUT}")
    for line in json.dumps(doc, indent=2).splitlines():
        print(line)


if __name__ == "__main__":
    main()
