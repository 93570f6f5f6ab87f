"""Arbitrary-precision constants, Hurwitz zeta and polygamma on top of mpmath floats.

mpmath supplies the big-float arithmetic (and elementary functions for the
Brent-McMillan step); the series themselves are computed here so they can be
checked against mpmath's own constants.
"""
from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

import mpmath

from .rational import BernoulliTable, DEFAULT_BERNOULLI_CAPACITY

__all__ = [
    "pi",
    "log2",
    "euler_gamma",
    "zeta",
    "hurwitz_zeta",
    "digamma",
    "polygamma",
    "to_mpf",
    "MIN_PRECISION",
    "MAX_PRECISION",
]

MIN_PRECISION = 10
MAX_PRECISION = 100
GUARD_DIGITS = 10

_cache: dict = {}
_lock = threading.Lock()


def _check_precision(precision: int) -> None:
    if not MIN_PRECISION <= precision <= MAX_PRECISION:
        raise ValueError(f"precision must lie in [{MIN_PRECISION}, {MAX_PRECISION}], got {precision}")


def _cached(key, compute):
    with _lock:
        if key in _cache:
            return _cache[key]
    value = compute()
    with _lock:
        _cache.setdefault(key, value)
        return _cache[key]


def _arctan_inv(q: int) -> mpmath.mpf:
    """arctan(1/q) by its Taylor series at the current working precision."""
    eps = mpmath.mpf(2) ** (-mpmath.mp.prec - 4)
    x = mpmath.mpf(1) / q
    q2 = q * q
    term = x
    total = x
    k = 1
    while abs(term) > eps:
        term /= -q2
        total += term / (2 * k + 1)
        k += 1
    return total


def pi(precision: int = 30) -> mpmath.mpf:
    """Machin's formula 16 atan(1/5) - 4 atan(1/239)."""
    _check_precision(precision)

    def compute():
        with mpmath.workdps(precision + GUARD_DIGITS):
            return 16 * _arctan_inv(5) - 4 * _arctan_inv(239)

    return _cached(("pi", precision), compute)


def log2(precision: int = 30) -> mpmath.mpf:
    """sum_{k>=1} 1 / (k 2^k)."""
    _check_precision(precision)

    def compute():
        with mpmath.workdps(precision + GUARD_DIGITS):
            eps = mpmath.mpf(2) ** (-mpmath.mp.prec - 4)
            total = mpmath.mpf(0)
            p = mpmath.mpf(1)
            k = 1
            while True:
                p /= 2
                term = p / k
                total += term
                if term < eps:
                    return total
                k += 1

    return _cached(("log2", precision), compute)


def euler_gamma(precision: int = 30) -> mpmath.mpf:
    """Brent-McMillan: gamma ~ A/B - log n with A, B Bessel-type sums; error ~ exp(-4n)."""
    _check_precision(precision)

    def compute():
        digits = precision + GUARD_DIGITS
        with mpmath.workdps(digits + 10):
            n = int(digits * math.log(10) / 4) + 2
            eps = mpmath.mpf(10) ** (-(digits + 8))
            log_n = mpmath.log(n)
            a = -log_n
            b = mpmath.mpf(1)
            A, B = a, b
            n2 = n * n
            k = 1
            while True:
                b = b * n2 / (k * k)
                a = (a * n2 / k + b) / k
                A += a
                B += b
                if abs(a) < eps * abs(A) and b < eps * B:
                    break
                k += 1
            return A / B

    return _cached(("gamma", precision), compute)


def _borwein_d(n: int):
    d = []
    s = mpmath.mpf(0)
    for i in range(n + 1):
        s += mpmath.mpf(math.factorial(n + i - 1) * 4**i) / (math.factorial(n - i) * math.factorial(2 * i))
        d.append(n * s)
    return d


def zeta(s: int, precision: int = 30) -> mpmath.mpf:
    """zeta(s), integer s >= 2, from the Borwein-accelerated alternating eta series."""
    _check_precision(precision)
    if s < 2:
        raise ValueError("zeta(s) needs s >= 2")

    def compute():
        digits = precision + GUARD_DIGITS
        with mpmath.workdps(digits + 5):
            # error of the acceleration ~ 3 / (3 + sqrt 8)^n
            n = int(digits / math.log10(3 + math.sqrt(8))) + 3
            d = _borwein_d(n)
            eta = mpmath.mpf(0)
            for k in range(n):
                term = (d[k] - d[n]) / mpmath.mpf(k + 1) ** s
                eta += -term if k % 2 == 0 else term
            eta = eta / d[n]
            return eta / (1 - mpmath.mpf(2) ** (1 - s))

    return _cached(("zeta", s, precision), compute)


@lru_cache(maxsize=None)
def _table(capacity: int) -> BernoulliTable:
    return BernoulliTable(capacity)


def _em_plan(digits: int, s: int):
    terms = int(digits / 1.5) + 5
    shift = s + 2 * terms + 10
    return terms, shift


def hurwitz_zeta(s: int, a, precision: int = 30) -> mpmath.mpf:
    """zeta(s, a) = sum_{j>=0} (j + a)^{-s} for integer s >= 2 and real a > 0.

    Direct sum up to a shift N, then the Euler-Maclaurin tail at a + N.
    """
    if s < 2:
        raise ValueError("hurwitz_zeta needs s >= 2")
    digits = precision + GUARD_DIGITS
    terms, shift = _em_plan(digits, s)
    table = _table(max(DEFAULT_BERNOULLI_CAPACITY, 2 * terms))
    with mpmath.workdps(digits):
        a = to_mpf(a)
        if a <= 0:
            raise ValueError("hurwitz_zeta needs a > 0")
        head = mpmath.fsum((a + j) ** (-s) for j in range(shift))
        x = a + shift
        tail = x ** (1 - s) / (s - 1) + x ** (-s) / 2
        # rising factorial s (s+1) ... (s+2k-2), updated two factors at a time
        rising = mpmath.mpf(s)
        xpow = x ** (-s - 1)
        x2 = x * x
        for k in range(1, terms + 1):
            b = table[2 * k]
            tail += mpmath.mpf(b.numerator) / b.denominator / math.factorial(2 * k) * rising * xpow
            rising *= (s + 2 * k - 1) * (s + 2 * k)
            xpow /= x2
        return head + tail


def digamma(a, precision: int = 30) -> mpmath.mpf:
    """psi(a) for real a > 0 by upward recurrence and the asymptotic series."""
    digits = precision + GUARD_DIGITS
    terms, shift = _em_plan(digits, 1)
    table = _table(max(DEFAULT_BERNOULLI_CAPACITY, 2 * terms))
    with mpmath.workdps(digits):
        a = to_mpf(a)
        if a <= 0:
            raise ValueError("digamma needs a > 0")
        head = mpmath.fsum(1 / (a + j) for j in range(shift))
        x = a + shift
        value = mpmath.log(x) - 1 / (2 * x)
        x2 = x * x
        xpow = 1 / x2
        for k in range(1, terms + 1):
            b = table[2 * k]
            value -= mpmath.mpf(b.numerator) / b.denominator / (2 * k) * xpow
            xpow /= x2
        return value - head


def polygamma(m: int, a, precision: int = 30) -> mpmath.mpf:
    """psi^{(m)}(a) = (-1)^{m+1} m! zeta(m+1, a) for m >= 1; digamma for m = 0."""
    if m == 0:
        return digamma(a, precision)
    sign = -1 if m % 2 == 0 else 1
    with mpmath.workdps(precision + GUARD_DIGITS):
        return sign * math.factorial(m) * hurwitz_zeta(m + 1, a, precision)


def to_mpf(q) -> mpmath.mpf:
    """Exact-as-possible conversion; Fractions are divided at working precision."""
    if isinstance(q, Fraction):
        return mpmath.mpf(q.numerator) / q.denominator
    return mpmath.mpf(q)
