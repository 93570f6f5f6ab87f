"""Numerical checks of the decomposition lemmas and the Gamma infinite-product formula."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence

import mpmath

from .. import constants
from ..partitions import Partition, is_vertical_strip, partitions, strip_ones
from .genfun import genfun_S1
from .oracle import (
    OracleResult,
    S_lambda_oracle,
    S_ones_oracle,
    U_d_oracle,
    U_d_symmetric,
    oracle_eval,
)
from .spec import LValueSpec

__all__ = [
    "IdentityCheck",
    "DecompositionReport",
    "gamma_product_check",
    "gamma_product_gap",
    "lemma_decomposition_check",
]


def gamma_product_gap(a: Sequence, b: Sequence, k_start: int, precision: int = 20,
                      terms: int = 2000) -> mpmath.mpf:
    """|prod_{m >= k} prod_j (m + a_j)/(m + b_j) - prod_j Gamma(k + b_j)/Gamma(k + a_j)|.

    The left product is taken up to m = k + terms - 1; the tail is folded in
    through log(1 + a/m) - log(1 + b/m) = sum_s (-1)^{s+1} (a^s - b^s) / (s m^s),
    summed over m with Hurwitz zeta values.
    """
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    if len(a) != len(b):
        raise ValueError("a and b must have the same length")
    if sum(a) != sum(b):
        raise ValueError(f"need sum(a) == sum(b), got {sum(a)} and {sum(b)}")
    if k_start + min(a + b) <= 0:
        raise ValueError("need k_start + min(a, b) > 0")
    with mpmath.workdps(precision + 15):
        A = [constants.to_mpf(x) for x in a]
        Bv = [constants.to_mpf(x) for x in b]
        left = mpmath.mpf(1)
        last = k_start + terms - 1
        for m in range(k_start, last + 1):
            for x, y in zip(A, Bv):
                left *= (m + x) / (m + y)
        bound = max(abs(x) for x in A + Bv) / (last + 1)
        log_tail = mpmath.mpf(0)
        s = 2
        while True:
            ps = sum(x**s for x in A) - sum(y**s for y in Bv)
            if ps:
                term = (-1) ** (s + 1) * ps / s * constants.hurwitz_zeta(s, last + 1, precision + 5)
                log_tail += term
            if bound**s < mpmath.mpf(10) ** (-(precision + 10)) or s > 400:
                break
            s += 1
        left *= mpmath.exp(log_tail)
        right = mpmath.mpf(1)
        for x, y in zip(A, Bv):
            right *= mpmath.gamma(k_start + y) / mpmath.gamma(k_start + x)
        return abs(left - right)


def gamma_product_check(a: Sequence, b: Sequence, k_start: int, precision: int = 20) -> bool:
    """True iff the two sides of the Gamma product formula agree to 10^{-precision/2}."""
    gap = gamma_product_gap(a, b, k_start, precision)
    return bool(gap < mpmath.mpf(10) ** (-precision / 2))


@dataclass
class IdentityCheck:
    name: str
    lhs: complex
    rhs: complex
    gap: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.gap < self.tolerance

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "gap": self.gap,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


@dataclass
class DecompositionReport:
    N: int
    M: int
    n: int
    k: int
    T: int
    checks: List[IdentityCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def max_gap(self) -> float:
        return max((c.gap for c in self.checks), default=0.0)

    def to_json(self) -> dict:
        return {
            "N": self.N, "M": self.M, "n": self.n, "k": self.k, "T": self.T,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
        }


def _S_ones_value(M: int, n: int, r: int, T: int, precision: int) -> complex:
    if r == 0:
        return 1
    if M in (1, 2):
        series = genfun_S1(M, n, n * r, "exact", precision)
        return complex(series[n * r].numeric_eval(precision))
    return complex(S_ones_oracle(M, n, r, T, precision).value)


def lemma_decomposition_check(N: int, M: int, n: int, k: int, T: int = 10**5, precision: int = 30,
                              tolerance: float = 1e-6, max_k: int = 4) -> DecompositionReport:
    """Evaluate both sides of the block decomposition identities with the brute-force oracles.

    Reports, each with its gap:
      * S_k(n) = sum_{lambda |- k} S(n; lambda)
      * S_k(n) = sum_{0 <= 2d <= k} S(n; 1^{k-2d}) U_d(n)
      * R(n; mu) = sum over lambda with lambda / mu_{>1} a vertical strip of S(n; lambda),
        for every mu |- k with mu_{>1} even
      * U_d by strict sums = h_d specialisation
      * S(n; 1^r) from the generating function = strict DP (when M is 1 or 2)
    """
    if k > max_k:
        raise ValueError(f"k <= {max_k} only")
    report = DecompositionReport(N, M, n, k, T)
    add = report.checks.append

    def check(name, lhs, rhs):
        lhs, rhs = complex(lhs), complex(rhs)
        add(IdentityCheck(name, lhs, rhs, abs(lhs - rhs), tolerance))

    if k == 0:
        check("S_0 = 1", 1, 1)
        return report

    S_lam: Dict[Partition, OracleResult] = {
        lam: S_lambda_oracle(N, M, n, lam, T, precision) for lam in partitions(k)
    }
    lhs = oracle_eval(LValueSpec.uniform(N, M, n, k), T, precision).value
    check(f"S_{k} = sum over lambda |- {k} of S(lambda)", lhs, sum(r.value for r in S_lam.values()))
    full = set(S_lam)

    U = {d: U_d_oracle(N, M, n, d, T, precision).value for d in range(k // 2 + 1)}
    ones = {r: _S_ones_value(M, n, r, T, precision) for r in range(k + 1)}
    check(f"S_{k} = sum_d S(1^(k-2d)) U_d", lhs, sum(ones[k - 2 * d] * U[d] for d in U))

    for mu in partitions(k):
        core = strip_ones(mu)
        if not core.is_even:
            continue
        q = mu.multiplicity(1)
        if core not in S_lam:
            S_lam[core] = S_lambda_oracle(N, M, n, core, T, precision)
        r_value = S_lam[core].value * _ones_oracle(N, M, n, q, T, precision)
        strips = [lam for lam in full if is_vertical_strip(lam, core)]
        check(f"R(mu={list(mu.parts)}) = sum over vertical strips", r_value,
              sum(S_lam[lam].value for lam in strips))

    for d in range(1, k // 2 + 1):
        check(f"U_{d}: strict sums = h_{d} specialisation", U[d], U_d_symmetric(N, M, n, d, T, precision))

    if M in (1, 2):
        for r in range(1, k + 1):
            check(f"S(1^{r}): generating function = strict DP", ones[r],
                  S_ones_oracle(M, n, r, T, precision).value)
    return report


def _ones_oracle(N, M, n, q, T, precision):
    if q == 0:
        return 1
    return S_ones_oracle(M, n, q, T, precision, N=N).value
