"""p-adic valuations of the alternating-sign-matrix counting function.

`exact` computes v_p(T(n)) by independent integer routes (digit sums,
Legendre floor sums, big-integer factoring); `analytic` evaluates the
exact fluctuation expansion (Fourier coefficients, periodic terms, case
constants) built on the Hurwitz zeta machinery in `special`; `cli` wraps
everything in a reproducible command-line harness.
"""

from ._kernels import backend as kernel_backend
from .analytic import (
    AnalyticDecomposition,
    CaseTag,
    FourierCoefficients,
    chi,
    delange_closed_form,
    fourier_coefficients,
    main_slope,
    phi_coeff,
    phi_eval,
    psi_coeff,
    psi_eval,
    remainder_constant,
    valuation_dirichlet_series,
    valuation_dirichlet_series_direct,
    valuation_expansion,
)
from .exact import (
    Prime,
    asm_count,
    digit_sum,
    prefix_digit_sum,
    vp,
    vp_asm_bignum,
    vp_asm_digit_sum,
    vp_asm_legendre,
    vp_asm_range_digit_sum,
    vp_asm_range_legendre,
    vp_factorial,
)
from .special import (
    AccuracyWarning,
    BernoulliTable,
    bernoulli_numbers,
    hurwitz_zeta,
    log_gamma_real,
    riemann_zeta,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyWarning",
    "AnalyticDecomposition",
    "BernoulliTable",
    "CaseTag",
    "FourierCoefficients",
    "Prime",
    "asm_count",
    "bernoulli_numbers",
    "chi",
    "delange_closed_form",
    "digit_sum",
    "fourier_coefficients",
    "hurwitz_zeta",
    "kernel_backend",
    "log_gamma_real",
    "main_slope",
    "phi_coeff",
    "phi_eval",
    "prefix_digit_sum",
    "psi_coeff",
    "psi_eval",
    "remainder_constant",
    "riemann_zeta",
    "valuation_dirichlet_series",
    "valuation_dirichlet_series_direct",
    "valuation_expansion",
    "vp",
    "vp_asm_bignum",
    "vp_asm_digit_sum",
    "vp_asm_legendre",
    "vp_asm_range_digit_sum",
    "vp_asm_range_legendre",
    "vp_factorial",
]
