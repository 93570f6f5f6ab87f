"""Gamma-product generating functions for U_d, S(n; 1^r) and S_k(n).

Each product of Gamma ratios is turned into a sum of log-Gamma series and
exponentiated.  In exact mode the log series are summed with cyclotomic
coefficients, collapsed to rationals, and checked to be free of Euler's
gamma before exponentiation.
"""
from __future__ import annotations

from fractions import Fraction

import mpmath

from .. import constants
from ..cyclotomic import root_of_unity
from ..errors import DivergentSeriesError
from ..series import TruncatedSeries, log_gamma_at, log_gamma_one_minus, series_exp
from ..symbolic import SymbolicValue, assert_gamma_free
from .spec import nu

__all__ = [
    "genfun_U",
    "genfun_S1",
    "genfun_P",
    "genfun_P2",
    "zeta_exponential",
    "coefficient",
]

MODES = ("exact", "numeric")


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _zero_series(order: int, mode: str) -> TruncatedSeries:
    zero = SymbolicValue() if mode == "exact" else mpmath.mpc(0)
    return TruncatedSeries([zero] * (order + 1))


def _finish(log_series: TruncatedSeries, mode: str) -> TruncatedSeries:
    if mode == "exact":
        log_series = log_series.map(lambda c: assert_gamma_free(c.rationalize()))
    return series_exp(log_series)


def _log_U(N: int, M: int, n: int, order: int, mode: str, precision: int) -> TruncatedSeries:
    total = _zero_series(order, mode)
    if mode == "exact":
        if N % M:
            raise ValueError(f"exact genfun_U needs M | N (got N={N}, M={M})")
        # prod_{j<2n} Gamma(1 - w_{2n}^j x / N)
        for j in range(2 * n):
            total = total + log_gamma_one_minus(root_of_unity(2 * n, j) / N, order)
        return total
    for k in range(1, M + 1):
        for j in range(2 * n):
            c = root_of_unity(2 * n, j) * root_of_unity(M * n, k * N) / (M * N)
            total = total + log_gamma_at(Fraction(k, M), c, order, mode="numeric", precision=precision)
    return total


def _log_S1(M: int, n: int, order: int, mode: str, precision: int) -> TruncatedSeries:
    if M == 1 and n == 1:
        raise DivergentSeriesError("S(1; 1^r) with M = 1 is harmonic and diverges")
    if mode == "exact" and M not in (1, 2):
        raise ValueError(f"exact genfun_S1 needs M in {{1, 2}}, got {M}")
    total = _zero_series(order, mode)
    for k in range(1, M + 1):
        for j in range(n):
            c = root_of_unity(2 * n, 2 * j - 1) * root_of_unity(M * n, k) / M
            total = total - log_gamma_at(Fraction(k, M), c, order, mode=mode, precision=precision)
    return total


def genfun_U(N: int, M: int, n: int, order: int, mode: str = "exact", precision: int = 30) -> TruncatedSeries:
    """sum_d U_d(n) x^{2nd} up to x^order."""
    _check_mode(mode)
    with mpmath.workdps(precision + constants.GUARD_DIGITS):
        return _finish(_log_U(N, M, n, order, mode, precision), mode)


def genfun_S1(M: int, n: int, order: int, mode: str = "exact", precision: int = 30) -> TruncatedSeries:
    """sum_r S(n; 1^r) x^{nr} up to x^order; depends on M only."""
    _check_mode(mode)
    with mpmath.workdps(precision + constants.GUARD_DIGITS):
        return _finish(_log_S1(M, n, order, mode, precision), mode)


def genfun_P(N: int, M: int, n: int, order: int, mode: str = "exact", precision: int = 30) -> TruncatedSeries:
    """sum_k S_k(n) x^{nk} = genfun_U * genfun_S1, up to x^order."""
    _check_mode(mode)
    with mpmath.workdps(precision + constants.GUARD_DIGITS):
        u = genfun_U(N, M, n, order, mode, precision)
        s = genfun_S1(M, n, order, mode, precision)
        return u * s


def genfun_P2(n: int, order: int) -> TruncatedSeries:
    """2^{-x [n=1]} prod_{j<n} Gamma(1 - x w_n^j / 2)^2 / Gamma(1 - x w_n^j), exactly."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = _zero_series(order, "exact")
    for j in range(n):
        w = root_of_unity(n, j)
        half = log_gamma_one_minus(w / 2, order)
        total = total + half + half - log_gamma_one_minus(w, order)
    if n == 1 and order >= 1:
        total = total + TruncatedSeries.monomial(-SymbolicValue.log2(), 1, order)
    return _finish(total, "exact")


def zeta_exponential(n: int, order: int) -> TruncatedSeries:
    """exp( sum_{m >= 1, nm >= 2} nu(nm) zeta(nm) x^{nm} / m ), up to x^order."""
    coeffs = [SymbolicValue() for _ in range(order + 1)]
    m = 1
    while n * m <= order:
        if n * m >= 2:
            coeffs[n * m] = SymbolicValue.zeta(n * m) * (nu(n * m) / m)
        m += 1
    return series_exp(TruncatedSeries(coeffs))


def coefficient(series: TruncatedSeries, degree: int):
    if degree > series.order:
        raise ValueError(f"degree {degree} is beyond the series order {series.order}")
    return series[degree]
