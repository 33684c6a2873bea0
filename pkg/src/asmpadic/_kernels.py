"""Kernel dispatch: the compiled extension when built, numpy otherwise.

Import :data:`COMPILED` / call :func:`backend` to see which one is active.
"""

from __future__ import annotations

try:
    from . import _ckernels as _impl

    COMPILED = True
except ImportError:  # extension not built; numpy fallback
    from . import _pykernels as _impl  # type: ignore[no-redef]

    COMPILED = False

digit_sum_table = _impl.digit_sum_table
valuation_table = _impl.valuation_table
power_sum = _impl.power_sum
progression_valuation_series = _impl.progression_valuation_series


def backend() -> str:
    """Name of the active kernel backend: ``"compiled"`` or ``"pure"``."""
    return "compiled" if COMPILED else "pure"
