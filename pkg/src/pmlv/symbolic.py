"""Closed-form values: Q-linear combinations of monomials in gamma, log 2, pi^2 and zeta(m).

Coefficients are Fractions.  While a generating function is being assembled
they may temporarily be :class:`CyclotomicNumber` objects; ``rationalize``
collapses them back and fails loudly if anything irrational is left.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Dict, Iterable, Iterator, Mapping, Tuple

import mpmath

from . import constants
from .cyclotomic import CyclotomicNumber
from .errors import CancellationError
from .rational import bernoulli

__all__ = [
    "ZetaGenerator",
    "EULER_GAMMA",
    "LOG2",
    "PI_SQUARED",
    "SymbolicValue",
    "normalize_even_zetas",
    "numeric_eval",
    "assert_gamma_free",
]

_KINDS = ("gamma", "log2", "pi2", "zeta")


@dataclass(frozen=True, order=True)
class ZetaGenerator:
    """One transcendental generator.  Sorted gamma < log2 < pi^2 < zeta(2) < zeta(3) < ..."""

    rank: int
    m: int = 0

    def __post_init__(self):
        if not 0 <= self.rank < len(_KINDS):
            raise ValueError(f"unknown generator rank {self.rank}")
        if self.rank == 3 and self.m < 2:
            raise ValueError("zeta(m) generators need m >= 2 (zeta(1) diverges)")

    @property
    def kind(self) -> str:
        return _KINDS[self.rank]

    @classmethod
    def zeta(cls, m: int) -> "ZetaGenerator":
        return cls(3, m)

    @classmethod
    def from_kind(cls, kind: str, m: int = 0) -> "ZetaGenerator":
        return cls(_KINDS.index(kind), m if kind == "zeta" else 0)

    def render(self) -> str:
        if self.rank == 3:
            return f"zeta({self.m})"
        return ("gamma", "log2", "pi^2")[self.rank]

    def numeric(self, precision: int) -> mpmath.mpf:
        if self.rank == 0:
            return constants.euler_gamma(precision)
        if self.rank == 1:
            return constants.log2(precision)
        if self.rank == 2:
            with mpmath.workdps(precision + constants.GUARD_DIGITS):
                return constants.pi(precision) ** 2
        return constants.zeta(self.m, precision)


EULER_GAMMA = ZetaGenerator(0)
LOG2 = ZetaGenerator(1)
PI_SQUARED = ZetaGenerator(2)

Monomial = Tuple[Tuple[ZetaGenerator, int], ...]
_ONE: Monomial = ()


def _is_scalar(x) -> bool:
    return isinstance(x, (int, _RationalABC, CyclotomicNumber))


def _canon_coeff(c):
    if isinstance(c, CyclotomicNumber) and c.is_rational():
        return c.to_rational()
    if isinstance(c, int):
        return Fraction(c)
    return c


def _canon_mono(mono) -> Monomial:
    powers: Dict[ZetaGenerator, int] = {}
    for g, p in mono:
        if p < 0:
            raise ValueError("negative generator powers are not allowed")
        powers[g] = powers.get(g, 0) + p
    return tuple(sorted((g, p) for g, p in powers.items() if p))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    powers: Dict[ZetaGenerator, int] = dict(a)
    for g, p in b:
        powers[g] = powers.get(g, 0) + p
    return tuple(sorted(powers.items()))


class SymbolicValue:
    """Immutable polynomial over Q in the generators; structural equality."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            items: Iterable = ()
        elif _is_scalar(terms):
            items = ((_ONE, terms),)
        elif isinstance(terms, Mapping):
            items = terms.items()
        else:
            raise TypeError(f"cannot build a SymbolicValue from {type(terms).__name__}")
        acc: Dict[Monomial, object] = {}
        for mono, c in items:
            mono = _canon_mono(mono)
            acc[mono] = acc.get(mono, 0) + c
        self._terms = {m: _canon_coeff(c) for m, c in sorted(acc.items()) if c}
        self._hash = None

    # --- constructors --------------------------------------------------------------------
    @classmethod
    def gen(cls, g: ZetaGenerator, power: int = 1) -> "SymbolicValue":
        return cls({((g, power),): 1})

    @classmethod
    def zeta(cls, m: int) -> "SymbolicValue":
        return cls.gen(ZetaGenerator.zeta(m))

    @classmethod
    def log2(cls) -> "SymbolicValue":
        return cls.gen(LOG2)

    @classmethod
    def pi_squared(cls) -> "SymbolicValue":
        return cls.gen(PI_SQUARED)

    @classmethod
    def euler_gamma(cls) -> "SymbolicValue":
        return cls.gen(EULER_GAMMA)

    # --- access --------------------------------------------------------------------------
    @property
    def terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, object]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def coefficient(self, monomial: Monomial = _ONE):
        return self._terms.get(_canon_mono(monomial), Fraction(0))

    def generators(self) -> set:
        return {g for mono in self._terms for g, _ in mono}

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(not mono for mono in self._terms)

    # --- ring operations -----------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, SymbolicValue):
            return other
        if _is_scalar(other):
            return SymbolicValue(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return SymbolicValue(acc)

    __radd__ = __add__

    def __neg__(self):
        return SymbolicValue({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if _is_scalar(other):
            return SymbolicValue({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, SymbolicValue):
            return NotImplemented
        acc: Dict[Monomial, object] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return SymbolicValue(acc)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, _RationalABC)):
            f = Fraction(other)
            return SymbolicValue({m: c / f for m, c in self._terms.items()})
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers are not supported")
        result = SymbolicValue(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"SymbolicValue({self.render()})"

    def __str__(self):
        return self.render()

    # --- transformations -----------------------------------------------------------------
    def map_monomials(self, fn) -> "SymbolicValue":
        """Replace every monomial by ``fn(monomial)`` (a SymbolicValue) and re-expand."""
        total = SymbolicValue()
        for mono, c in self._terms.items():
            total = total + fn(mono) * c
        return total

    def rationalize(self) -> "SymbolicValue":
        """Force every coefficient to be a Fraction (raises ConsistencyError otherwise)."""
        return SymbolicValue(
            {m: c.to_rational() if isinstance(c, CyclotomicNumber) else c for m, c in self._terms.items()}
        )

    def normalize_even_zetas(self) -> "SymbolicValue":
        return normalize_even_zetas(self)

    def numeric_eval(self, precision: int = 30):
        return numeric_eval(self, precision)

    def assert_gamma_free(self) -> "SymbolicValue":
        return assert_gamma_free(self)

    # --- serialisation -------------------------------------------------------------------
    def to_json(self) -> dict:
        terms = []
        for mono, c in self._terms.items():
            if isinstance(c, CyclotomicNumber):
                c = c.to_rational()
            terms.append(
                {
                    "coefficient": f"{c.numerator}/{c.denominator}",
                    "monomial": [{"gen": g.kind, "m": g.m, "power": p} for g, p in mono],
                }
            )
        return {"terms": terms, "rendered": self.render()}

    @classmethod
    def from_json(cls, data) -> "SymbolicValue":
        terms = data["terms"] if isinstance(data, Mapping) else data
        acc = {}
        for t in terms:
            mono = tuple((ZetaGenerator.from_kind(f["gen"], f.get("m", 0)), int(f["power"])) for f in t["monomial"])
            acc[mono] = acc.get(mono, 0) + Fraction(t["coefficient"])
        return cls(acc)

    def render(self) -> str:
        """Plain-text form such as ``1/2*log2^2 - 1/4*zeta(2)`` (pi^2 powers shown as pi^6 etc.)."""
        if not self._terms:
            return "0"
        pieces = []
        for mono, c in self._terms.items():
            factors = []
            for g, p in mono:
                if g == PI_SQUARED:
                    factors.append(f"pi^{2 * p}")
                else:
                    factors.append(g.render() + (f"^{p}" if p > 1 else ""))
            if isinstance(c, CyclotomicNumber):
                body = "*".join([f"({c!r})"] + factors)
                pieces.append(("+", body))
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if factors:
                body = "*".join(([] if mag == 1 else [str(mag)]) + factors)
            else:
                body = str(mag)
            pieces.append((sign, body))
        out = ("-" if pieces[0][0] == "-" else "") + pieces[0][1]
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _even_zeta_as_pi(m: int) -> SymbolicValue:
    """zeta(2j) = (-1)^{j-1} 2^{2j-1} B_{2j} pi^{2j} / (2j)!"""
    j = m // 2
    coeff = Fraction((-1) ** (j - 1) * 2 ** (2 * j - 1)) * bernoulli(2 * j) / math.factorial(2 * j)
    return SymbolicValue.gen(PI_SQUARED, j) * coeff


def normalize_even_zetas(v: SymbolicValue) -> SymbolicValue:
    """Rewrite every zeta(2j) as a rational multiple of (pi^2)^j."""

    def rewrite(mono: Monomial) -> SymbolicValue:
        out = SymbolicValue(1)
        for g, p in mono:
            if g.rank == 3 and g.m % 2 == 0:
                out = out * _even_zeta_as_pi(g.m) ** p
            else:
                out = out * SymbolicValue.gen(g, p)
        return out

    return v.map_monomials(rewrite)


def numeric_eval(v: SymbolicValue, precision: int = 30):
    """Substitute high-precision constants; returns an mpf (mpc if a coefficient is not real)."""
    constants._check_precision(precision)
    with mpmath.workdps(precision + constants.GUARD_DIGITS):
        total = mpmath.mpf(0)
        for mono, c in v:
            term = mpmath.mpf(1)
            for g, p in mono:
                term *= g.numeric(precision) ** p
            if isinstance(c, CyclotomicNumber):
                term *= c.complex_eval(precision + constants.GUARD_DIGITS)
            else:
                term *= constants.to_mpf(c)
            total += term
        return total


def assert_gamma_free(v: SymbolicValue) -> SymbolicValue:
    if EULER_GAMMA in v.generators():
        raise CancellationError(f"Euler's constant failed to cancel: {v.render()}")
    return v
