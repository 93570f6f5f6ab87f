"""Verification harness: named checks grouped into suites, each reporting a measured gap."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

import mpmath

from . import constants
from .lvalues import (
    PRINTED_EXAMPLES,
    PRINTED_S3_3,
    LValueSpec,
    bernoulli_S_k_even,
    closed_S_k,
    double_zeta_remark,
    finite_partial_S2,
    gamma_product_gap,
    genfun_P,
    genfun_P2,
    lemma_decomposition_check,
    oracle_eval,
    zeta_exponential,
)
from .lvalues.oracle import strict_sum_oracle
from .partitions import is_vertical_strip, partitions, strip_ones, unique_even_mu
from .symbolic import SymbolicValue, assert_gamma_free, normalize_even_zetas, numeric_eval

__all__ = ["CheckResult", "SUITES", "run_suite", "s3_3_discrepancy"]


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    gap: Optional[float] = None
    detail: str = ""

    def to_json(self) -> dict:
        return asdict(self)


def _exact(suite: str, name: str, lhs: SymbolicValue, rhs: SymbolicValue) -> CheckResult:
    ok = lhs == rhs
    return CheckResult(suite, name, ok, 0.0 if ok else None, "" if ok else f"{lhs.render()} != {rhs.render()}")


def _numeric(suite: str, name: str, a, b, tol: float) -> CheckResult:
    gap = float(abs(mpmath.mpc(a) - mpmath.mpc(b)))
    return CheckResult(suite, name, gap < tol, gap)


# --- exact suite --------------------------------------------------------------------------

def check_bernoulli_forms(max_k: int, **_) -> List[CheckResult]:
    out = []
    for n in (1, 2, 3):
        for k in range(1, min(max_k, 4) + 1):
            forms = [bernoulli_S_k_even(n, k, f) for f in ("conv", "plethysm", "zeta")]
            ok = forms[0] == forms[1] == forms[2]
            out.append(CheckResult("exact", f"S_{k}({2 * n}): conv = plethysm = zeta", ok, 0.0 if ok else None))
    return out


def check_S_k_2(max_k: int, **_) -> List[CheckResult]:
    out = []
    for k in range(1, max(max_k, 6) + 1):
        expected = normalize_even_zetas(SymbolicValue.zeta(2 * k) * Fraction(-1, 2 ** (2 * k - 1)))
        out.append(_exact("exact", f"S_{k}(2) = -zeta({2 * k})/2^{2 * k - 1}", bernoulli_S_k_even(1, k, "conv"), expected))
    return out


def check_printed_examples(**_) -> List[CheckResult]:
    out = []
    for key, value in PRINTED_EXAMPLES.items():
        n, k = int(key[4]), int(key[2])
        out.append(_exact("exact", f"{key} closed form", closed_S_k(n, k), value))
    out.append(s3_3_discrepancy())
    return out


def check_genfun_P2(max_k: int, **_) -> List[CheckResult]:
    out = []
    for n in (1, 2, 3):
        series = genfun_P2(n, 12)
        free = True
        for c in series:
            try:
                assert_gamma_free(c)
            except ArithmeticError:
                free = False
        out.append(CheckResult("exact", f"genfun_P2({n}) gamma-free", free, 0.0 if free else None))
        for k in range(1, 12 // n + 1):
            out.append(_exact("exact", f"genfun_P2({n}) [x^{n * k}] = S_{k}({n})", series[n * k], closed_S_k(n, k)))
    return out


def check_genfun_agrees(max_k: int, **_) -> List[CheckResult]:
    out = []
    for n in (1, 2, 3):
        order = n * max_k
        out.append(CheckResult("exact", f"genfun_P(2,2,{n}) = genfun_P2({n})",
                               genfun_P(2, 2, n, order) == genfun_P2(n, order)))
    return out


def check_A_vanishing(max_k: int, **_) -> List[CheckResult]:
    out = []
    for n in (1, 2, 3, 4):
        series = zeta_exponential(n, 12)
        bad = [m for m in range(1, 13) if m % n and not series[m].is_zero()]
        out.append(CheckResult("exact", f"[x^m] zeta exponential vanishes for {n} !| m", not bad, 0.0 if not bad else None,
                               f"nonzero at {bad}" if bad else ""))
    return out


def check_unique_even_mu(max_k: int, **_) -> List[CheckResult]:
    out = []
    for k in range(0, max(max_k, 12) + 1):
        ok = True
        for lam in partitions(k):
            hits = [mu for mu in partitions(k) if strip_ones(mu).is_even and is_vertical_strip(lam, strip_ones(mu))]
            if len(hits) != 1 or hits[0] != unique_even_mu(lam):
                ok = False
                break
        out.append(CheckResult("exact", f"unique even mu for every lambda |- {k}", ok, 0.0 if ok else None))
    return out


# --- numeric suite ------------------------------------------------------------------------

def check_oracle_closed(max_k: int, T: int = 10**6, precision: int = 30, **_) -> List[CheckResult]:
    out = []
    for n in (1, 2, 3, 4):
        for k in range(1, max_k + 1):
            value = oracle_eval(LValueSpec.uniform(2, 2, n, k), T, precision).value
            out.append(_numeric("numeric", f"oracle S_{k}({n}) = closed form", value,
                                numeric_eval(closed_S_k(n, k), precision), 1e-8))
    return out


def check_general_theorem(max_k: int, T: int = 10**6, precision: int = 30, **_) -> List[CheckResult]:
    out = []
    for N, M, n in ((3, 3, 2), (2, 3, 1), (3, 2, 2)):
        series = genfun_P(N, M, n, n * max_k, "numeric", precision)
        for k in range(1, max_k + 1):
            out.append(_numeric("numeric", f"genfun_P({N},{M},{n}) [x^{n * k}] = oracle", series[n * k],
                                oracle_eval(LValueSpec.uniform(N, M, n, k), T, precision).value, 1e-6))
    return out


def check_double_zeta(max_k: int, T: int = 10**6, precision: int = 30, **_) -> List[CheckResult]:
    out = []
    for k in (1, 2):
        for order, weights in (("first", (1, 2 * k)), ("second", (2 * k, 1))):
            value = oracle_eval(LValueSpec(2, 2, weights), T, precision).value
            out.append(_numeric("numeric", f"S_2{weights} double zeta formula", value,
                                numeric_eval(double_zeta_remark(k, order), precision), 1e-6))
    return out


def check_finite_partial(max_k: int, **_) -> List[CheckResult]:
    out = []
    for k in range(1, min(max_k, 3) + 1):
        target = numeric_eval(bernoulli_S_k_even(1, k), 30)
        gaps = [float(abs(constants.to_mpf(finite_partial_S2(k, p)) - target)) for p in (10**2, 10**3, 10**4)]
        ok = gaps[-1] < 1e-4 and gaps[0] > gaps[1] > gaps[2]
        out.append(CheckResult("numeric", f"finite_partial_S2({k}, p) -> S_{k}(2)", ok, gaps[-1],
                               "gaps " + ", ".join(f"{g:.3e}" for g in gaps)))
    return out


def check_epsilon_rule(max_k: int, **_) -> List[CheckResult]:
    """N = 1 gives the plain non-strict sum; N > T gives the strict sum on the same range."""
    out = []
    T = 40
    for weights in ((2,), (1, 2), (2, 1, 3)):
        with mpmath.workdps(40):
            roots = [mpmath.expjpi(mpmath.mpf(2 * j) / 3) for j in range(3)]
            plain = mpmath.mpc(0)
            for idx in itertools.combinations_with_replacement(range(1, T + 1), len(weights)):
                term = roots[sum(idx) % 3]
                for i, w in zip(idx, weights):
                    term /= mpmath.mpf(i) ** w
                plain += term
        value = oracle_eval(LValueSpec(1, 3, weights), T, backend="mpmath", accelerate=False).value
        out.append(_numeric("numeric", f"N=1 oracle = non-strict sum {weights}", value, plain, 1e-20))
    for n, k in ((2, 2), (2, 3), (3, 3)):
        wide = oracle_eval(LValueSpec.uniform(T + 1, 3, n, k), T, backend="mpmath", accelerate=False).value
        strict = strict_sum_oracle(T + 1, 3, n, (1,) * k, T, backend="mpmath", accelerate=False).value
        out.append(_numeric("numeric", f"N>T oracle = strict sum (n={n}, k={k})", wide, strict, 1e-20))
    return out


def check_gamma_product(**_) -> List[CheckResult]:
    half = Fraction(1, 2)
    families = [
        ("a = b", [Fraction(1, 3), 2], [Fraction(1, 3), 2], 1),
        ("a=(1,-1), b=(0,0), k=2", [1, -1], [0, 0], 2),
        ("a=(1/2,-1/2), b=(0,0), k=1", [half, -half], [0, 0], 1),
    ]
    out = []
    for name, a, b, k in families:
        gap = float(gamma_product_gap(a, b, k, 20))
        out.append(CheckResult("lemma", f"Gamma product {name}", gap < 1e-10, gap))
    return out


def check_lemmas(max_k: int, T: int = 10**5, **_) -> List[CheckResult]:
    out = []
    for N, M, n, tol in ((2, 2, 1, 1e-8), (2, 2, 2, 1e-8), (3, 3, 2, 1e-6), (3, 3, 1, 1e-6)):
        for k in range(0, min(max_k, 4) + 1):
            report = lemma_decomposition_check(N, M, n, k, T, tolerance=tol)
            for c in report.checks:
                out.append(CheckResult("lemma", f"(N,M,n,k)=({N},{M},{n},{k}) {c.name}", c.passed, c.gap))
    return out


def s3_3_discrepancy() -> CheckResult:
    """Records that the printed 93/128 coefficient of zeta(6)zeta(3) in S_3(3) disagrees with 93/256."""
    derived = closed_S_k(3, 3)
    printed_value = numeric_eval(PRINTED_S3_3, 30)
    derived_value = numeric_eval(derived, 30)
    ok = derived == PRINTED_EXAMPLES["S_3(3)"] and derived != PRINTED_S3_3
    detail = (f"printed 93/128 gives {mpmath.nstr(printed_value, 12)}, "
              f"derived 93/256 gives {mpmath.nstr(derived_value, 12)}")
    return CheckResult("exact", "S_3(3) printed 93/128 differs from derived 93/256", ok,
                       float(abs(printed_value - derived_value)), detail)


SUITES: Dict[str, List[Callable[..., List[CheckResult]]]] = {
    "exact": [check_S_k_2, check_bernoulli_forms, check_printed_examples, check_genfun_P2,
              check_genfun_agrees, check_A_vanishing, check_unique_even_mu],
    "numeric": [check_oracle_closed, check_general_theorem, check_double_zeta, check_finite_partial,
                check_epsilon_rule],
    "lemma": [check_gamma_product, check_lemmas],
}


def _call(args):
    fn, kwargs = args
    return fn(**kwargs)


def run_suite(suite: str = "all", max_k: int = 3, jobs: int = 1, T: Optional[int] = None,
              precision: int = 30) -> List[CheckResult]:
    """Run one suite (or all) and return every check in a stable order.

    jobs > 1 fans the check groups out over worker processes (mpmath keeps its
    working precision in process-global state, so threads are not used).
    """
    if suite == "all":
        fns = [fn for name in SUITES for fn in SUITES[name]]
    elif suite in SUITES:
        fns = list(SUITES[suite])
    else:
        raise ValueError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    kwargs = {"max_k": max_k, "precision": precision}
    if T is not None:
        kwargs["T"] = T
    tasks = [(fn, kwargs) for fn in fns]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            groups = list(pool.map(_call, tasks))
    else:
        groups = [_call(t) for t in tasks]
    return [r for g in groups for r in g]
