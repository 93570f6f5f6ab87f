"""Exact rationals, Bernoulli numbers, factorials and binomials.

Rationals are plain :class:`fractions.Fraction` objects; ``Rational`` is an
alias kept so signatures read like the rest of the package.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import List

from .errors import CapacityError

__all__ = [
    "Rational",
    "BernoulliTable",
    "bernoulli",
    "factorial",
    "binomial",
    "DEFAULT_BERNOULLI_CAPACITY",
]

Rational = Fraction

DEFAULT_BERNOULLI_CAPACITY = 200


class BernoulliTable:
    """B_0 .. B_capacity from sum_{j=0}^{n} C(n+1, j) B_j = 0 (so B_1 = -1/2).

    Built once in the constructor and read-only afterwards.
    """

    def __init__(self, capacity: int = DEFAULT_BERNOULLI_CAPACITY):
        if capacity < 0:
            raise ValueError("capacity must be >= 0")
        self.capacity = capacity
        values: List[Fraction] = [Fraction(1)]
        for n in range(1, capacity + 1):
            if n >= 3 and n % 2 == 1:
                values.append(Fraction(0))
                continue
            s = sum(math.comb(n + 1, j) * values[j] for j in range(n))
            values.append(-s / (n + 1))
        self._values = tuple(values)

    @property
    def values(self) -> tuple:
        return self._values

    def __getitem__(self, m: int) -> Fraction:
        if m < 0:
            raise ValueError("Bernoulli index must be >= 0")
        if m > self.capacity:
            raise CapacityError(
                f"B_{m} requested but the table holds indices 0..{self.capacity}; "
                "rebuild with a larger capacity"
            )
        return self._values[m]

    def __len__(self) -> int:
        return len(self._values)


@lru_cache(maxsize=None)
def _default_table() -> BernoulliTable:
    return BernoulliTable()


def bernoulli(m: int, table: BernoulliTable | None = None) -> Fraction:
    """Return B_m from ``table`` (default: the shared capacity-200 table)."""
    return (table or _default_table())[m]


def factorial(m: int) -> int:
    if m < 0:
        raise ValueError("factorial of a negative number")
    return math.factorial(m)


def binomial(n: int, k: int) -> Fraction:
    """C(n, k) for any integer n and k >= 0 (falling factorial over k!)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    num = 1
    for j in range(k):
        num *= n - j
    return Fraction(num, math.factorial(k))
