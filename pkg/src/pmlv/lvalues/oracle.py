"""Brute-force truncated sums: the defining series, strict block sums, U_d and finite partial sums.

Every sum here is a chain DP over the running index i = 1..T:

    B_1(i) = f_1(i),   B_{j+1}(i) = f_{j+1}(i) * (sum_{i' < i} B_j(i') + mask_j(i) B_j(i))

with prefix sums, so the cost is O(k T).  Large T runs in numpy complex128;
small T (or ``backend="mpmath"``) runs at the requested decimal precision.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import mpmath
import numpy as np

from ..errors import CapacityError, DivergentSeriesError
from ..partitions import Partition, distinct_permutations, partitions, scale
from .spec import LValueSpec

try:
    import gmpy2

    _mpz = gmpy2.mpz
except ImportError:  # pragma: no cover - exact sums still work, just slower
    _mpz = int

__all__ = [
    "OracleResult",
    "oracle_eval",
    "strict_sum_oracle",
    "S_lambda_oracle",
    "S_ones_oracle",
    "U_d_oracle",
    "U_d_symmetric",
    "finite_partial_S2",
    "MPMATH_BACKEND_LIMIT",
]

MPMATH_BACKEND_LIMIT = 4000
MAX_FINITE_K = 6
MAX_FINITE_P = 10**5


@dataclass(frozen=True)
class OracleResult:
    value: mpmath.mpc
    error_estimate: float
    truncation: int
    averaged: bool
    flagged: bool = False

    def __complex__(self):
        return complex(self.value)

    def to_json(self) -> dict:
        return {
            "re": mpmath.nstr(self.value.real, 20),
            "im": mpmath.nstr(self.value.imag, 20),
            "error_estimate": float(self.error_estimate),
            "truncation": self.truncation,
            "averaged": self.averaged,
            "flagged": self.flagged,
        }


@lru_cache(maxsize=None)
def _root_table(M: int, precision: int) -> Tuple[mpmath.mpc, ...]:
    with mpmath.workdps(precision + 10):
        return tuple(mpmath.expjpi(mpmath.mpf(2 * j) / M) for j in range(M))


# --- numpy backend ------------------------------------------------------------------------

def _np_levels(levels, M: int, T: int):
    """levels: sequence of (weight, phase_multiplier, divisibility_N_or_None, equal_N_or_None)."""
    i = np.arange(1, T + 1, dtype=np.int64)
    inv = 1.0 / i.astype(np.float64)
    roots = np.array([complex(z) for z in _root_table(M, 20)], dtype=np.complex128)
    B = None
    prev_equal = None
    for weight, mult, div, equal in levels:
        f = roots[(mult * i) % M] * inv**weight
        if div is not None:
            f = np.where(i % div == 0, f, 0)
        if B is None:
            B = f
        else:
            run = np.empty_like(B)
            run[0] = 0
            np.cumsum(B[:-1], out=run[1:])
            if prev_equal is not None:
                run = run + np.where(i % prev_equal == 0, B, 0)
            B = f * run
        prev_equal = equal
    return np.cumsum(B)


def _mp_levels(levels, M: int, T: int, precision: int):
    roots = _root_table(M, precision)
    with mpmath.workdps(precision + 10):
        B: Optional[List] = None
        prev_equal = None
        for weight, mult, div, equal in levels:
            f = []
            for i in range(1, T + 1):
                if div is not None and i % div:
                    f.append(mpmath.mpc(0))
                else:
                    f.append(roots[(mult * i) % M] / mpmath.mpf(i) ** weight)
            if B is None:
                B = f
            else:
                run = mpmath.mpc(0)
                nxt = []
                for i in range(1, T + 1):
                    b = B[i - 1]
                    here = run + (b if prev_equal is not None and i % prev_equal == 0 else 0)
                    nxt.append(f[i - 1] * here)
                    run += b
                B = nxt
            prev_equal = equal
        partial = []
        acc = mpmath.mpc(0)
        for b in B:
            acc += b
            partial.append(acc)
        return partial


def _period(levels, M: int) -> int:
    period = M
    for _, _, div, equal in levels:
        for q in (div, equal):
            if q:
                period = math.lcm(period, q)
    return period


def _evaluate(levels, M: int, T: int, precision: int, average: bool, backend: str,
              tolerance: Optional[float], accelerate: bool = True) -> OracleResult:
    """Sum the chain up to T and extrapolate.

    Partial sums are averaged over one full period of the summand pattern,
    which removes the oscillating part of the tail; the remaining smooth tail
    c_1/T + c_2/T^2 + ... is removed by two Richardson steps over T, T/2, T/4.
    The error estimate is the change against the same estimate from T/2.
    ``average`` only records whether the sum is conditionally convergent.
    With ``accelerate=False`` the raw partial sum at T is returned.
    """
    if T < 10:
        raise ValueError("truncation T must be >= 10")
    if backend == "auto":
        backend = "mpmath" if T <= MPMATH_BACKEND_LIMIT else "numpy"
    if backend == "numpy":
        partial = _np_levels(levels, M, T)
    elif backend == "mpmath":
        partial = _mp_levels(levels, M, T, precision)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    window = _period(levels, M)
    step = 16 * window
    extrapolate = accelerate and T >= step
    if not accelerate:
        window = 1
    elif not extrapolate:
        window = min(window, T // 2)

    def at(t: int):
        if backend == "numpy":
            return mpmath.mpc(complex(np.mean(partial[t - window:t])))
        return mpmath.fsum(partial[t - window:t]) / window

    with mpmath.workdps(precision + 10):
        if extrapolate:
            T0 = T - T % step
            a = [at(T0 >> j) for j in range(4)]
            value = (8 * a[0] - 6 * a[1] + a[2]) / 3
            half = (8 * a[1] - 6 * a[2] + a[3]) / 3
        else:
            value = at(T)
            half = at(T // 2)
        err = float(abs(value - half))
    flagged = tolerance is not None and err > tolerance
    return OracleResult(value, err, T, average, flagged)


def oracle_eval(spec: LValueSpec, T: int = 10**6, precision: int = 30, backend: str = "auto",
                tolerance: Optional[float] = None, accelerate: bool = True) -> OracleResult:
    """Truncated value of S^{(N,M)}_k(n_1..n_k).

    Conditionally convergent sums (a weight 1 with M >= 2) are flagged
    ``averaged``; every sum is period-averaged and extrapolated in T.
    """
    if spec.k == 0:
        return OracleResult(mpmath.mpc(1), 0.0, T, False)
    levels = [(w, 1, None, spec.N) for w in spec.weights]
    average = spec.convergence == "conditional" and spec.M >= 2
    return _evaluate(levels, spec.M, T, precision, average, backend, tolerance, accelerate)


def strict_sum_oracle(N: int, M: int, n: int, r: Sequence[int], T: int = 10**6, precision: int = 30,
                      backend: str = "auto", tolerance: Optional[float] = None,
                      accelerate: bool = True) -> OracleResult:
    """sum over j_1 < ... < j_l with r_i > 1 => N | j_i of w_M^{sum r_i j_i} / prod j_i^{n r_i}."""
    r = tuple(r)
    if not r:
        return OracleResult(mpmath.mpc(1), 0.0, T, False)
    if any(x < 1 for x in r):
        raise ValueError("multiplicities must be positive")
    effective = [n * x for x in r]
    if M == 1 and 1 in effective:
        raise DivergentSeriesError(f"weight-1 block with M = 1 diverges (n={n}, r={r})")
    levels = [(n * x, x, N if x > 1 else None, None) for x in r]
    average = M >= 2 and 1 in effective
    return _evaluate(levels, M, T, precision, average, backend, tolerance, accelerate)


def _sum_results(results: Sequence[OracleResult], T: int) -> OracleResult:
    value = mpmath.mpc(0)
    err = 0.0
    for res in results:
        value += res.value
        err += res.error_estimate
    return OracleResult(value, err, T, any(r.averaged for r in results), any(r.flagged for r in results))


def S_lambda_oracle(N: int, M: int, n: int, lam: Partition, T: int = 10**6, precision: int = 30,
                    backend: str = "auto") -> OracleResult:
    """S^{(N,M)}(n; lambda): strict sums over every distinct ordering of lambda."""
    if not lam.parts:
        return OracleResult(mpmath.mpc(1), 0.0, T, False)
    return _sum_results(
        [strict_sum_oracle(N, M, n, r, T, precision, backend) for r in distinct_permutations(lam)], T
    )


def S_ones_oracle(M: int, n: int, r: int, T: int = 10**6, precision: int = 30, backend: str = "auto",
                  N: int = 1) -> OracleResult:
    """S(n; 1^r) = e_r(w_M / 1^n, w_M^2 / 2^n, ...) by the strict-chain DP (independent of N)."""
    return strict_sum_oracle(N, M, n, (1,) * r, T, precision, backend)


def U_d_oracle(N: int, M: int, n: int, d: int, T: int = 10**6, precision: int = 30,
               backend: str = "auto") -> OracleResult:
    """U_d = sum_{mu |- d} S(n; 2 mu) from strict block sums."""
    if d == 0:
        return OracleResult(mpmath.mpc(1), 0.0, T, False)
    return _sum_results(
        [S_lambda_oracle(N, M, n, scale(mu, 2), T, precision, backend) for mu in partitions(d)], T
    )


def U_d_symmetric(N: int, M: int, n: int, d: int, T: int = 10**6, precision: int = 30) -> mpmath.mpc:
    """h_d(x_1, x_2, ...) with x_m = w_M^{2mN} / (N m)^{2n}, via Newton's identities.

    The power sums are cut at m <= T / N and extrapolated the same way as the
    chain sums (Richardson over cuts c, c/2, c/4 with c a multiple of 4M).
    """
    roots = _root_table(M, precision)
    with mpmath.workdps(precision + 10):
        if d == 0:
            return mpmath.mpc(1)
        count = T // N
        step = 4 * M
        cuts = [count]
        if count >= 4 * step:
            c0 = count - count % step
            cuts = [c0, c0 // 2, c0 // 4]
        if count <= MPMATH_BACKEND_LIMIT:
            xs = [roots[(2 * m * N) % M] / mpmath.mpf(N * m) ** (2 * n) for m in range(1, count + 1)]

            def power_sum(r, c):
                return mpmath.fsum(x**r for x in xs[:c])
        else:
            m = np.arange(1, count + 1, dtype=np.int64)
            rts = np.array([complex(z) for z in roots], dtype=np.complex128)
            x = rts[(2 * m * N) % M] * (1.0 / (N * m.astype(np.float64))) ** (2 * n)
            # sum from the small terms up to keep float64 rounding low
            csum = {r: np.cumsum((x**r)[::-1])[::-1] for r in range(1, d + 1)}

            def power_sum(r, c):
                tail = csum[r][c] if c < count else 0
                return mpmath.mpc(complex(csum[r][0] - tail))

        def h_at(c):
            p = [None] + [power_sum(r, c) for r in range(1, d + 1)]
            h = [mpmath.mpc(1)]
            for j in range(1, d + 1):
                h.append(mpmath.fsum(p[r] * h[j - r] for r in range(1, j + 1)) / j)
            return h[d]

        if len(cuts) == 1:
            return h_at(count)
        a = [h_at(c) for c in cuts]
        return (8 * a[0] - 6 * a[1] + a[2]) / 3


_finite_cache: dict = {}


def _finite_levels(k: int, p: int) -> List[Fraction]:
    """Exact finite sums for every depth 1..k in one pass (cached per p)."""
    cached = _finite_cache.get(p)
    if cached is not None and len(cached) >= k:
        return cached
    top = 2 * p
    D = _mpz(math.lcm(*range(1, top + 1))) ** 2
    run = [_mpz(0)] * k  # exclusive prefix sums; level j is scaled by D^{j+1}
    for i in range(1, top + 1):
        w = D // (i * i)
        if i % 2:
            w = -w
        prev = w
        fresh = [w]
        for j in range(1, k):
            inner = run[j - 1] + prev if i % 2 == 0 else run[j - 1]
            prev = w * inner
            fresh.append(prev)
        for j in range(k):
            run[j] += fresh[j]
    out = []
    scale_ = _mpz(1)
    for j in range(k):
        scale_ *= D
        out.append(Fraction(int(run[j]), int(scale_)))
    _finite_cache[p] = out
    return out


def finite_partial_S2(k: int, p: int) -> Fraction:
    """Exact sum over 1 <= i_1 <= ... <= i_k <= 2p of eps^{(2)} (-1)^{sum i} / prod i^2.

    Levels are integers over the common scale D = lcm(1..2p)^2 (level j over D^j).
    """
    if k < 1 or p < 1:
        raise ValueError("k and p must be positive")
    if k > MAX_FINITE_K or p > MAX_FINITE_P:
        raise CapacityError(f"finite_partial_S2 guard: k <= {MAX_FINITE_K}, p <= {MAX_FINITE_P}")
    return _finite_levels(k, p)[k - 1]
