"""Exact arithmetic in Q(omega_M), stored in the power basis modulo Phi_M."""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational as _RationalABC
from typing import Sequence, Tuple

import mpmath

from .errors import ConsistencyError
from .partitions import Partition, multiset_permutations

__all__ = [
    "cyclotomic_polynomial",
    "CyclotomicNumber",
    "root_of_unity",
    "power_sum_roots",
    "monomial_at_roots",
    "complex_eval",
]


def _poly_divexact(num: Sequence[int], den: Sequence[int]) -> Tuple[int, ...]:
    """Exact division of integer polynomials (coefficient lists, low degree first)."""
    num = list(num)
    dq = len(num) - len(den)
    if dq < 0:
        raise ValueError("divisor has larger degree")
    lead = den[-1]
    quot = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c, r = divmod(num[i + len(den) - 1], lead)
        if r:
            raise ArithmeticError("inexact polynomial division")
        quot[i] = c
        for j, d in enumerate(den):
            num[i + j] -= c * d
    if any(num):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> Tuple[int, ...]:
    """Coefficients of Phi_m, constant term first: (x^m - 1) / prod_{d | m, d < m} Phi_d."""
    if m < 1:
        raise ValueError("order must be >= 1")
    poly = (-1,) + (0,) * (m - 1) + (1,)
    for d in range(1, m):
        if m % d == 0:
            poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return poly


def _degree(m: int) -> int:
    return len(cyclotomic_polynomial(m)) - 1


def _reduce(coeffs: Sequence[Fraction], m: int) -> Tuple[Fraction, ...]:
    """Reduce a polynomial in omega modulo the monic Phi_m."""
    phi = cyclotomic_polynomial(m)
    deg = len(phi) - 1
    c = list(coeffs)
    for i in range(len(c) - 1, deg - 1, -1):
        top = c[i]
        if top:
            for j in range(deg):
                c[i - deg + j] -= top * phi[j]
        c[i] = 0
    c = c[:deg] + [Fraction(0)] * (deg - len(c))
    return tuple(Fraction(x) for x in c)


class CyclotomicNumber:
    """An element sum_j coeffs[j] omega_M^j of Q(omega_M), omega_M = exp(2 pi i / M)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Sequence = ()):
        if order < 1:
            raise ValueError("order must be >= 1")
        self.order = order
        self.coeffs = _reduce([Fraction(c) for c in coeffs] or [Fraction(0)], order)

    @classmethod
    def rational(cls, value, order: int = 1) -> "CyclotomicNumber":
        return cls(order, [Fraction(value)])

    # --- conversion between orders -------------------------------------------------
    def lift(self, order: int) -> "CyclotomicNumber":
        """The same number written in Q(omega_order); ``self.order`` must divide ``order``."""
        if order == self.order:
            return self
        if order % self.order:
            raise ValueError(f"cannot embed Q(w_{self.order}) in Q(w_{order})")
        step = order // self.order
        poly = [Fraction(0)] * (step * (len(self.coeffs) - 1) + 1)
        for j, c in enumerate(self.coeffs):
            poly[j * step] = c
        return CyclotomicNumber(order, poly)

    def _common(self, other) -> Tuple["CyclotomicNumber", "CyclotomicNumber"]:
        if not isinstance(other, CyclotomicNumber):
            other = CyclotomicNumber.rational(other, self.order)
        if other.order == self.order:
            return self, other
        lcm = self.order * other.order // math.gcd(self.order, other.order)
        return self.lift(lcm), other.lift(lcm)

    # --- predicates ---------------------------------------------------------------------
    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise ConsistencyError(f"{self!r} is not rational")
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # --- ring operations ----------------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, _RationalABC)):
            return NotImplemented
        a, b = self._common(other)
        return CyclotomicNumber(a.order, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, [-x for x in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, (CyclotomicNumber, int, _RationalABC)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, _RationalABC)):
            f = Fraction(other)
            return CyclotomicNumber(self.order, [x * f for x in self.coeffs])
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        prod = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod[i + j] += x * y
        return CyclotomicNumber(a.order, prod)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            f = Fraction(other)
            return CyclotomicNumber(self.order, [x / f for x in self.coeffs])
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = CyclotomicNumber.rational(1, self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, _RationalABC)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.order, self.coeffs))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        terms = [f"{c}*w{self.order}^{j}" for j, c in enumerate(self.coeffs) if c]
        return "CyclotomicNumber(" + (" + ".join(terms) or "0") + ")"

    def complex_eval(self, precision: int = 30) -> mpmath.mpc:
        return complex_eval(self, precision)


def root_of_unity(m: int, e: int = 1) -> CyclotomicNumber:
    """omega_m^e in canonical form; the exponent is taken mod m."""
    if m < 1:
        raise ValueError("order must be >= 1")
    e %= m
    return CyclotomicNumber(m, [0] * e + [1])


def power_sum_roots(n: int, m: int) -> Fraction:
    """sum_{j=0}^{n-1} omega_n^{jm}, summed exactly (n if n | m, else 0)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    total = sum((root_of_unity(n, j * m) for j in range(n)), CyclotomicNumber.rational(0, n))
    return total.to_rational()


def monomial_at_roots(lam: Partition, n: int) -> Fraction:
    """m_lambda(1, w_n, ..., w_n^{n-1}) evaluated exactly; always a rational integer."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if len(lam) > n:
        return Fraction(0)
    total = CyclotomicNumber.rational(0, n)
    for alpha in multiset_permutations(lam.padded(n)):
        total = total + root_of_unity(n, sum(j * a for j, a in enumerate(alpha)))
    value = total.to_rational()
    if value.denominator != 1:
        raise ConsistencyError(f"m_{lam.parts} at {n}th roots of unity is {value}, not an integer")
    return value


def complex_eval(z: CyclotomicNumber, precision: int = 30) -> mpmath.mpc:
    """sum_j coeffs[j] exp(2 pi i j / M) to ``precision`` decimal digits."""
    if precision < 10:
        raise ValueError("precision must be >= 10 digits")
    with mpmath.workdps(precision + 5):
        acc = mpmath.mpc(0)
        for j, c in enumerate(z.coeffs):
            if c:
                acc += mpmath.mpf(c.numerator) / c.denominator * mpmath.expjpi(mpmath.mpf(2 * j) / z.order)
        return acc
