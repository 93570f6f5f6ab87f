"""Truncated power series over a pluggable coefficient ring, and log-Gamma expansions.

Coefficients may be Fractions, CyclotomicNumbers, SymbolicValues or mpmath
numbers; the only requirement is +, -, * and division by an int.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Callable, List, Sequence

import mpmath

from . import constants
from .cyclotomic import CyclotomicNumber
from .symbolic import SymbolicValue

__all__ = [
    "TruncatedSeries",
    "series_mul",
    "series_exp",
    "series_log",
    "log_gamma_one_minus",
    "log_gamma_at",
    "is_exact_scalar",
]


def _zero_like(c):
    return c * 0


def _is_zero(c) -> bool:
    return c == 0


class TruncatedSeries:
    """c_0 + c_1 x + ... + c_T x^T, everything above x^T discarded."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        if not len(coeffs):
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        zero = _zero_like(value)
        return cls([value] + [zero] * order)

    @classmethod
    def monomial(cls, coeff, degree: int, order: int) -> "TruncatedSeries":
        zero = _zero_like(coeff)
        c = [zero] * (order + 1)
        if degree <= order:
            c[degree] = coeff
        return cls(c)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series known to order {self.order} up to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def _check(self, other: "TruncatedSeries"):
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}; truncate explicitly")

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return TruncatedSeries([-a for a in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries([a * other for a in self.coeffs])

    def __rmul__(self, other):
        return TruncatedSeries([other * a for a in self.coeffs])

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None

    def map(self, fn: Callable) -> "TruncatedSeries":
        return TruncatedSeries([fn(c) for c in self.coeffs])

    def derivative(self) -> "TruncatedSeries":
        """Formal derivative, re-padded to the same order (top coefficient becomes zero)."""
        zero = _zero_like(self.coeffs[0])
        return TruncatedSeries([c * k for k, c in enumerate(self.coeffs) if k] + [zero])

    def exp(self) -> "TruncatedSeries":
        return series_exp(self)

    def log(self) -> "TruncatedSeries":
        return series_log(self)

    def to_json(self) -> list:
        return [_coeff_json(c) for c in self.coeffs]

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)!r})"


def _coeff_json(c):
    if isinstance(c, SymbolicValue):
        return c.to_json()
    if isinstance(c, (int, _RationalABC)):
        c = Fraction(c)
        return f"{c.numerator}/{c.denominator}"
    if isinstance(c, CyclotomicNumber):
        return {"order": c.order, "coeffs": [f"{q.numerator}/{q.denominator}" for q in c.coeffs]}
    c = mpmath.mpc(c)
    return {"re": mpmath.nstr(c.real, mpmath.mp.dps), "im": mpmath.nstr(c.imag, mpmath.mp.dps)}


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common order."""
    a._check(b)
    T = a.order
    zero = _zero_like(a.coeffs[0])
    out = [zero] * (T + 1)
    nz_b = [(j, c) for j, c in enumerate(b.coeffs) if not _is_zero(c)]
    for i, x in enumerate(a.coeffs):
        if _is_zero(x):
            continue
        for j, y in nz_b:
            if i + j > T:
                break
            out[i + j] = out[i + j] + x * y
    return TruncatedSeries(out)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """exp(a) from b' = a' b, b_0 = 1; requires a_0 = 0."""
    if not _is_zero(a.coeffs[0]):
        raise ValueError("series_exp needs a zero constant term")
    T = a.order
    zero = _zero_like(a.coeffs[0])
    b = [zero + 1] + [zero] * T
    ka = [(k, a.coeffs[k] * k) for k in range(1, T + 1) if not _is_zero(a.coeffs[k])]
    for n in range(1, T + 1):
        acc = zero
        for k, c in ka:
            if k > n:
                break
            if not _is_zero(b[n - k]):
                acc = acc + c * b[n - k]
        b[n] = acc / n
    return TruncatedSeries(b)


def series_log(a: TruncatedSeries) -> TruncatedSeries:
    """log(a) for a_0 = 1, from a l' = a'."""
    if not a.coeffs[0] == 1:
        raise ValueError("series_log needs constant term 1")
    T = a.order
    zero = _zero_like(a.coeffs[0])
    out = [zero] * (T + 1)
    for n in range(1, T + 1):
        acc = a.coeffs[n] * n
        for k in range(1, n):
            if not _is_zero(out[k]) and not _is_zero(a.coeffs[n - k]):
                acc = acc - out[k] * k * a.coeffs[n - k]
        out[n] = acc / n
    return TruncatedSeries(out)


def is_exact_scalar(c) -> bool:
    return isinstance(c, (int, _RationalABC, CyclotomicNumber, SymbolicValue))


@lru_cache(maxsize=None)
def _hurwitz(s: int, a: Fraction, precision: int):
    return constants.hurwitz_zeta(s, a, precision)


@lru_cache(maxsize=None)
def _digamma(a: Fraction, precision: int):
    return constants.digamma(a, precision)


def _exact_coefficient(a: Fraction, m: int) -> SymbolicValue:
    """Coefficient of t^m in log Gamma(a - t) - log Gamma(a), for a in {1, 1/2}."""
    gamma = SymbolicValue.euler_gamma()
    if m == 1:
        # -psi(1) = gamma, -psi(1/2) = gamma + 2 log 2
        return gamma if a == 1 else gamma + SymbolicValue.log2() * 2
    # zeta(m, 1) = zeta(m), zeta(m, 1/2) = (2^m - 1) zeta(m)
    scale = Fraction(1, m) if a == 1 else Fraction(2**m - 1, m)
    return SymbolicValue.zeta(m) * scale


def log_gamma_at(a, c, T: int, mode: str | None = None, precision: int = 30) -> TruncatedSeries:
    """log Gamma(a - c x) - log Gamma(a) as a series in x up to x^T.

    Coefficient of x^1 is -psi(a) c; of x^m (m >= 2) is zeta(m, a) c^m / m.
    Exact mode (symbolic coefficients) only for a in {1, 1/2}; numeric mode
    evaluates psi and Hurwitz zeta at ``precision`` digits and returns mpc
    coefficients.
    """
    a = Fraction(a)
    if not 0 < a <= 1:
        raise ValueError("a must lie in (0, 1]")
    if mode is None:
        mode = "exact" if is_exact_scalar(c) else "numeric"
    if mode == "exact":
        if a not in (1, Fraction(1, 2)):
            raise ValueError(f"exact mode supports Gamma arguments 1 and 1/2 only, not {a}")
        coeffs: List = [SymbolicValue()]
        power = c
        for m in range(1, T + 1):
            coeffs.append(_exact_coefficient(a, m) * power)
            power = power * c
        return TruncatedSeries(coeffs)
    if mode != "numeric":
        raise ValueError(f"unknown mode {mode!r}")
    with mpmath.workdps(precision + constants.GUARD_DIGITS):
        if isinstance(c, CyclotomicNumber):
            c = c.complex_eval(precision + constants.GUARD_DIGITS)
        elif isinstance(c, Fraction):
            c = constants.to_mpf(c)
        c = mpmath.mpc(c)
        coeffs = [mpmath.mpc(0)]
        power = c
        for m in range(1, T + 1):
            if m == 1:
                coeffs.append(-_digamma(a, precision) * power)
            else:
                coeffs.append(_hurwitz(m, a, precision) / m * power)
            power *= c
    return TruncatedSeries(coeffs)


def log_gamma_one_minus(c, T: int, mode: str | None = None, precision: int = 30) -> TruncatedSeries:
    """log Gamma(1 - c x) = gamma c x + sum_{m>=2} zeta(m) c^m x^m / m, up to x^T."""
    return log_gamma_at(1, c, T, mode=mode, precision=precision)
