"""Exact q-series toolkit.

Thin Python surface over the C++ core: exact rational Taylor coefficients
(g_k, h_k, u_k, G_k), partition coefficient tables a(n,m) / b(n,m), the
identity verification suites, and the numeric modular evaluators.
"""

from fractions import Fraction

try:
    from ._qeis import (
        AccuracyError,
        BranchError,
        coeff_table,
        eval_function,
        series_coeffs,
        series_json,
        unimodal_ranks,
        verify_exact,
        verify_limits,
        verify_numeric,
    )
except ImportError:  # extension living next to the package (in-tree builds)
    from _qeis import (
        AccuracyError,
        BranchError,
        coeff_table,
        eval_function,
        series_coeffs,
        series_json,
        unimodal_ranks,
        verify_exact,
        verify_limits,
        verify_numeric,
    )

__all__ = [
    "AccuracyError",
    "BranchError",
    "coeff_table",
    "eval_function",
    "series",
    "series_coeffs",
    "series_json",
    "unimodal_ranks",
    "verify_exact",
    "verify_limits",
    "verify_numeric",
]


def series(which, k, order):
    """Coefficients of the requested series as exact ``Fraction`` values."""
    return [Fraction(c) for c in series_coeffs(which, k, order)]
