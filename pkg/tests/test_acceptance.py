"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Every criterion prints one ``PASS``/``FAIL`` line (collected into the pytest
terminal summary, and printed directly when run as a script).
"""
import time
from fractions import Fraction

import mpmath
import pytest

from oracles import poly_h, poly_mul
from pmlv.cyclotomic import monomial_at_roots
from pmlv.lvalues import (
    PRINTED_EXAMPLES,
    PRINTED_S3_3,
    LValueSpec,
    bernoulli_S_k_even,
    closed_S_k,
    double_zeta_remark,
    finite_partial_S2,
    gamma_product_check,
    genfun_P,
    genfun_P2,
    lemma_decomposition_check,
    oracle_eval,
)
from pmlv.lvalues import oracle as oracle_module
from pmlv.partitions import is_vertical_strip, partitions, strip_ones, unique_even_mu
from pmlv.symbolic import SymbolicValue, assert_gamma_free, normalize_even_zetas, numeric_eval
from pmlv.verify import s3_3_discrepancy

RESULTS = []


class Criterion:
    def __init__(self, number, title, budget):
        self.number, self.title, self.budget = number, title, budget
        self.notes = []

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        slow = elapsed >= self.budget
        ok = exc_type is None and not slow
        extra = "; ".join(self.notes)
        if slow and exc_type is None:
            extra = (extra + "; " if extra else "") + f"over budget {self.budget}s"
        line = f"{'PASS' if ok else 'FAIL'} criterion {self.number}: {self.title} ({elapsed:.2f}s){' - ' + extra if extra else ''}"
        RESULTS.append(line)
        print(line)
        if slow and exc_type is None:
            raise AssertionError(f"criterion {self.number} took {elapsed:.2f}s, budget {self.budget}s")
        return False


def test_criterion_01_S_k_2_identity():
    with Criterion(1, "S_k(2) = -zeta(2k)/2^(2k-1), k = 1..6, exact", 1.0):
        for k in range(1, 7):
            expected = normalize_even_zetas(SymbolicValue.zeta(2 * k) * Fraction(-1, 2 ** (2 * k - 1)))
            assert bernoulli_S_k_even(1, k, "conv") == expected, k


def test_criterion_02_three_forms():
    with Criterion(2, "conv = plethysm = zeta forms of S_k(2n), n <= 3, k <= 4, exact", 10.0):
        for n in (1, 2, 3):
            for k in range(1, 5):
                forms = [bernoulli_S_k_even(n, k, f) for f in ("conv", "plethysm", "zeta")]
                assert forms[0] == forms[1] == forms[2], (n, k)


def test_criterion_03_printed_examples():
    with Criterion(3, "printed examples reproduced; S_3(3) discrepancy recorded", 1.0) as c:
        z, L, F = SymbolicValue.zeta, SymbolicValue.log2(), Fraction
        printed = {
            (1, 1): -L,
            (1, 2): L**2 / 2 - z(2) / 4,
            (1, 3): -(L**3) / 6 + L * z(2) / 4 - z(3) / 4,
            (3, 1): -z(3) * F(3, 4),
            (3, 2): -z(6) * F(31, 64) + z(3) ** 2 * F(9, 32),
        }
        for (n, k), value in printed.items():
            assert closed_S_k(n, k) == value, (n, k)
            assert PRINTED_EXAMPLES[f"S_{k}({n})"] == value
        z_form = z(9) * F(-85, 256) + z(6) * z(3) * F(93, 256) - z(3) ** 3 * F(27, 384)
        assert closed_S_k(3, 3) == z_form
        assert closed_S_k(3, 3) != PRINTED_S3_3
        record = s3_3_discrepancy()
        assert record.passed
        c.notes.append(f"S_3(3): {record.detail}")


def test_criterion_04_oracle_vs_closed():
    with Criterion(4, "oracle vs closed form, N = M = 2, n <= 4, k <= 3, T = 1e6, gap < 1e-8", 60.0) as c:
        worst = 0.0
        for n in (1, 2, 3, 4):
            for k in (1, 2, 3):
                res = oracle_eval(LValueSpec.uniform(2, 2, n, k), T=10**6, precision=30)
                assert res.averaged == (n == 1)
                gap = float(abs(res.value - numeric_eval(closed_S_k(n, k), 30)))
                worst = max(worst, gap)
                assert gap < 1e-8, (n, k, gap)
        c.notes.append(f"max gap {worst:.1e}")


def test_criterion_05_genfun_consistency():
    with Criterion(5, "genfun_P2(n) coefficients to x^12 equal closed forms, gamma-free", 10.0):
        for n in (1, 2, 3):
            series = genfun_P2(n, 12)
            for degree, coeff in enumerate(series):
                assert_gamma_free(coeff)
                if degree % n:
                    assert coeff.is_zero()
                else:
                    assert coeff == closed_S_k(n, degree // n), (n, degree)


def test_criterion_06_general_theorem():
    with Criterion(6, "genfun_P(3,3,2, order 6, numeric) vs oracle, k = 1..3, gap < 1e-6", 60.0) as c:
        series = genfun_P(3, 3, 2, 6, "numeric", 30)
        worst = 0.0
        for k in (1, 2, 3):
            value = oracle_eval(LValueSpec.uniform(3, 3, 2, k), T=10**6).value
            gap = float(abs(series[2 * k] - value))
            worst = max(worst, gap)
            assert gap < 1e-6, (k, gap)
        c.notes.append(f"max gap {worst:.1e}")


def test_criterion_07_plethysm():
    with Criterion(7, "monomial_at_roots = <p_n o h_k, m_lambda> by 2n-variable expansion, n, k <= 3", 10.0):
        for n in (1, 2, 3):
            V = 2 * n
            for k in (1, 2, 3):
                lhs = {}
                for lam in partitions(n * k):
                    if len(lam) > n:
                        continue
                    value = monomial_at_roots(lam, n)
                    assert Fraction(value).denominator == 1
                    if not value:
                        continue
                    h = {(0,) * V: 1}
                    for part in lam:
                        h = poly_mul(h, poly_h(part, V))
                    for e, v in h.items():
                        lhs[e] = lhs.get(e, 0) + value * v
                lhs = {e: v for e, v in lhs.items() if v}
                rhs = {tuple(n * x for x in e): v for e, v in poly_h(k, V).items()}
                assert lhs == rhs, (n, k)


def test_criterion_08_lemma_suite():
    with Criterion(8, "lemma checks (1e-8 at N=M=2, 1e-6 at N=M=3), unique even mu, Gamma products", 60.0) as c:
        worst = {}
        for N, M, tol in ((2, 2, 1e-8), (3, 3, 1e-6)):
            for n in (1, 2):
                for k in range(0, 4):
                    report = lemma_decomposition_check(N, M, n, k, T=10**5, tolerance=tol)
                    assert report.passed, [(x.name, x.gap) for x in report.checks if not x.passed]
                    worst[(N, M)] = max(worst.get((N, M), 0.0), report.max_gap)
        for k in range(13):
            parts = partitions(k)
            for lam in parts:
                hits = [mu for mu in parts if strip_ones(mu).is_even and is_vertical_strip(lam, strip_ones(mu))]
                assert hits == [unique_even_mu(lam)]
        half = Fraction(1, 2)
        assert gamma_product_check([Fraction(1, 3), 2], [Fraction(1, 3), 2], 1, 20)
        assert gamma_product_check([1, -1], [0, 0], 2, 20)
        assert gamma_product_check([half, -half], [0, 0], 1, 20)
        c.notes.append(", ".join(f"N=M={N}: max gap {g:.1e}" for (N, _), g in worst.items()))


def test_criterion_09_double_zeta():
    with Criterion(9, "double zeta formulas vs oracle, k = 1, 2, T = 1e6, gap < 1e-6", 30.0) as c:
        worst = 0.0
        for k in (1, 2):
            for order, weights in (("first", (1, 2 * k)), ("second", (2 * k, 1))):
                res = oracle_eval(LValueSpec(2, 2, weights), T=10**6)
                assert res.averaged
                gap = float(abs(res.value - numeric_eval(double_zeta_remark(k, order), 30)))
                worst = max(worst, gap)
                assert gap < 1e-6, (weights, gap)
        c.notes.append(f"max gap {worst:.1e}")


def test_criterion_10_finite_partial_sums():
    oracle_module._finite_cache.clear()
    with Criterion(10, "finite_partial_S2(k, p) -> S_k(2): gap < 1e-4 at p = 1e4, shrinking", 30.0) as c:
        gaps_by_k = []
        for k in (1, 2, 3):
            with mpmath.workdps(40):
                target = numeric_eval(bernoulli_S_k_even(1, k), 30)
                gaps = [abs(mpmath.mpf(finite_partial_S2(k, p).numerator) / finite_partial_S2(k, p).denominator - target)
                        for p in (10**2, 10**3, 10**4)]
            assert gaps[0] > gaps[1] > gaps[2], (k, gaps)
            assert gaps[2] < 1e-4, (k, gaps)
            gaps_by_k.append(float(gaps[2]))
        c.notes.append("gaps at p=1e4: " + ", ".join(f"{g:.1e}" for g in gaps_by_k))


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
