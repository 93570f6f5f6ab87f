"""Closed forms for the N = M = 2 values S_k(n) = S^{(2,2)}_k(n, ..., n)."""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Dict

from ..cyclotomic import CyclotomicNumber, monomial_at_roots, root_of_unity
from ..errors import ConsistencyError
from ..partitions import partitions, z_mu
from ..rational import bernoulli
from ..symbolic import SymbolicValue, normalize_even_zetas
from .spec import nu

__all__ = [
    "Z_n_k",
    "closed_S_k_n1",
    "closed_S_k_n",
    "closed_S_k",
    "S1",
    "bernoulli_S_k_even",
    "double_zeta_remark",
    "PRINTED_EXAMPLES",
    "PRINTED_S3_3",
]

FORMS = ("conv", "plethysm", "zeta")


def Z_n_k(n: int, k: int) -> SymbolicValue:
    """sum over mu |- k (no parts equal to 1 when n = 1) of nu(n mu) / z_mu * zeta(n mu)."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    total = SymbolicValue()
    for mu in partitions(k):
        if n == 1 and 1 in mu.parts:
            continue
        coeff = Fraction(1) / z_mu(mu)
        term = SymbolicValue(1)
        for part in mu:
            coeff *= nu(n * part)
            term = term * SymbolicValue.zeta(n * part)
        total = total + term * coeff
    return total


def closed_S_k_n1(k: int) -> SymbolicValue:
    """S_k(1) = sum_m (-log 2)^{k-m} / (k-m)! * Z_1(m)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    minus_log2 = -SymbolicValue.log2()
    return sum(
        (minus_log2 ** (k - m) * Z_n_k(1, m) / math.factorial(k - m) for m in range(k + 1)),
        SymbolicValue(),
    )


def closed_S_k_n(n: int, k: int) -> SymbolicValue:
    """S_k(n) = Z_n(k) for n >= 2."""
    if n < 2:
        raise ValueError("closed_S_k_n needs n >= 2; use closed_S_k_n1 for n = 1")
    return Z_n_k(n, k)


def closed_S_k(n: int, k: int) -> SymbolicValue:
    return closed_S_k_n1(k) if n == 1 else closed_S_k_n(n, k)


def S1(n: int) -> SymbolicValue:
    """S^{(2)}_1(n) = (2^{1-n} - 1) zeta(n), n >= 2."""
    return SymbolicValue.zeta(n) * nu(n)


def _bernoulli_ratio(m: int) -> Fraction:
    return bernoulli(2 * m) / math.factorial(2 * m)


def _conv(n: int, k: int) -> Fraction:
    total = CyclotomicNumber.rational(0, n)
    for ms in product(range(n * k + 1), repeat=n - 1):
        last = n * k - sum(ms)
        if last < 0:
            continue
        ms = ms + (last,)
        weight = Fraction(1)
        for m in ms:
            weight *= _bernoulli_ratio(m)
        if weight:
            total = total + root_of_unity(n, sum((j + 1) * m for j, m in enumerate(ms))) * weight
    if not total.is_rational():
        raise ConsistencyError(f"Bernoulli convolution for n={n}, k={k} left {total!r}")
    return total.to_rational()


def _plethysm(n: int, k: int) -> Fraction:
    total = Fraction(0)
    for lam in partitions(n * k):
        if len(lam) > n:
            continue
        c = monomial_at_roots(lam, n)
        if c:
            weight = Fraction(1)
            for part in lam:
                weight *= _bernoulli_ratio(part)
            total += c * weight
    return total


def bernoulli_S_k_even(n: int, k: int, form: str = "conv") -> SymbolicValue:
    """S_k(2n) as a rational multiple of (pi^2)^{nk}, by one of three routes.

    conv:     (-pi^2)^{nk} sum over m_1+...+m_n = nk of w_n^{m_1+2m_2+...+n m_n} prod B_{2m_i}/(2m_i)!
    plethysm: (-pi^2)^{nk} sum over lambda |- nk, len <= n of <p_n o h_k, m_lambda> B_{2 lambda}/(2 lambda)!
    zeta:     Z_{2n}(k) with the even zetas rewritten through Bernoulli numbers
    """
    if n < 1 or k < 1:
        raise ValueError("need n, k >= 1")
    if form == "zeta":
        return normalize_even_zetas(Z_n_k(2 * n, k))
    if form == "conv":
        r = _conv(n, k)
    elif form == "plethysm":
        r = _plethysm(n, k)
    else:
        raise ValueError(f"form must be one of {FORMS}, got {form!r}")
    return SymbolicValue.pi_squared() ** (n * k) * (r * (-1) ** (n * k))


def double_zeta_remark(k: int, order: str = "first") -> SymbolicValue:
    """S^{(2)}_2(1, 2k) (order='first') or S^{(2)}_2(2k, 1) (order='second')."""
    if k < 1:
        raise ValueError("k must be >= 1")
    z = SymbolicValue.zeta
    log2 = SymbolicValue.log2()
    tail = sum((S1(2 * p + 1) * z(2 * k - 2 * p) for p in range(1, k)), SymbolicValue())
    if order == "first":
        return S1(2 * k + 1) * (k + 1) + z(2 * k) * log2 * (2 * (1 - Fraction(1, 4**k))) - tail
    if order == "second":
        return -S1(2 * k + 1) * k - z(2 * k) * log2 + tail
    raise ValueError("order must be 'first' or 'second'")


def _printed() -> Dict[str, SymbolicValue]:
    z = SymbolicValue.zeta
    L = SymbolicValue.log2()
    F = Fraction
    return {
        "S_1(1)": -L,
        "S_2(1)": L**2 / 2 - z(2) / 4,
        "S_3(1)": -(L**3) / 6 + L * z(2) / 4 - z(3) / 4,
        "S_1(3)": -z(3) * F(3, 4),
        "S_2(3)": -z(6) * F(31, 64) + z(3) ** 2 * F(9, 32),
        "S_3(3)": -z(9) * F(255, 768) + z(6) * z(3) * F(93, 256) - z(3) ** 3 * F(27, 384),
    }


# Worked examples as printed, except S_3(3): its zeta(6)zeta(3) coefficient
# is printed as 93/128 but the partition formula and the series oracle both
# give 93/256.  PRINTED_S3_3 keeps the literal version for comparison.
PRINTED_EXAMPLES: Dict[str, SymbolicValue] = _printed()
PRINTED_S3_3 = (
    -SymbolicValue.zeta(9) * Fraction(255, 768)
    + SymbolicValue.zeta(6) * SymbolicValue.zeta(3) * Fraction(93, 128)
    - SymbolicValue.zeta(3) ** 3 * Fraction(27, 384)
)
