from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import finite_S2_fractions, nonstrict_sum
from pmlv.errors import CapacityError, DivergentSeriesError
from pmlv.lvalues import (
    LValueSpec,
    S_lambda_oracle,
    S_ones_oracle,
    U_d_oracle,
    U_d_symmetric,
    epsilon,
    epsilon_chain,
    finite_partial_S2,
    nu,
    nu_tilde,
    oracle_eval,
    strict_sum_oracle,
)
from pmlv.partitions import Partition, distinct_permutations, partitions


def zeta(s):
    with mpmath.workdps(40):
        return mpmath.zeta(s)


def test_spec_rules():
    assert LValueSpec(2, 2, (1, 2)).convergence == "conditional"
    assert LValueSpec(1, 1, (2, 3)).convergence == "absolute"
    assert LValueSpec(2, 2, ()).k == 0
    with pytest.raises(DivergentSeriesError):
        LValueSpec(3, 1, (2, 1))
    with pytest.raises(ValueError):
        LValueSpec(2, 2, (0,))
    with pytest.raises(ValueError):
        LValueSpec(0, 2, (2,))


def test_epsilon():
    assert epsilon(2, 3, 3) == 0
    assert epsilon(2, 4, 4) == 1
    assert epsilon(2, 3, 5) == 1
    assert epsilon_chain(2, (1, 2, 2, 5)) == 1
    assert epsilon_chain(2, (1, 1, 2)) == 0


def test_nu():
    for m in range(1, 20):
        assert (nu(m) + 1) * (nu_tilde(m) + 1) == 1
        assert nu(m) == Fraction(2) ** (1 - m) - 1
    assert nu(1) == 0


def test_examples():
    r = oracle_eval(LValueSpec(2, 2, (2,)))
    assert abs(r.value + zeta(2) / 2) < 1e-10
    assert oracle_eval(LValueSpec(2, 2, ())).value == 1
    r = oracle_eval(LValueSpec(2, 2, (1,)))
    assert r.averaged
    assert abs(r.value + mpmath.log(2)) < 1e-10
    assert r.error_estimate < 1e-10


def test_small_T_rejected_and_flagging():
    with pytest.raises(ValueError):
        oracle_eval(LValueSpec(2, 2, (2,)), T=5)
    r = oracle_eval(LValueSpec(2, 2, (2,)), T=20, tolerance=1e-30)
    assert r.flagged


@settings(max_examples=25)
@given(st.integers(1, 4), st.integers(1, 4), st.lists(st.integers(1, 3), min_size=1, max_size=3))
def test_raw_dp_equals_enumeration(N, M, weights):
    if M == 1 and 1 in weights:
        return
    T = 18
    dp = oracle_eval(LValueSpec(N, M, tuple(weights)), T, backend="mpmath", accelerate=False).value
    assert abs(dp - nonstrict_sum(N, M, weights, T)) < 1e-25


def test_numpy_and_mpmath_backends_agree():
    spec = LValueSpec(3, 3, (1, 2, 2))
    a = oracle_eval(spec, 3000, backend="mpmath", accelerate=False).value
    b = oracle_eval(spec, 3000, backend="numpy", accelerate=False).value
    assert abs(a - b) < 1e-12


def test_epsilon_limits():
    # N = 1: plain non-strict sum; N > T: strict sum on the same range
    T = 30
    a = oracle_eval(LValueSpec(1, 2, (2, 2)), T, backend="mpmath", accelerate=False).value
    assert abs(a - nonstrict_sum(1, 2, (2, 2), T)) < 1e-25
    b = oracle_eval(LValueSpec(T + 1, 2, (2, 2)), T, backend="mpmath", accelerate=False).value
    c = strict_sum_oracle(T + 1, 2, 2, (1, 1), T, backend="mpmath", accelerate=False).value
    assert abs(b - c) < 1e-25


def test_strict_sum_examples():
    r = strict_sum_oracle(2, 2, 1, (1,))
    assert abs(r.value + mpmath.log(2)) < 1e-10
    # one block of size k >= 2 forces even j, so the phase drops out
    for k in (2, 3):
        r = strict_sum_oracle(2, 2, 2, (k,))
        assert abs(r.value - zeta(2 * k) / 2 ** (2 * k)) < 1e-10
    with pytest.raises(DivergentSeriesError):
        strict_sum_oracle(2, 1, 1, (1, 2))


@pytest.mark.parametrize("N,M,n,k", [(2, 2, 2, 2), (2, 2, 1, 2), (3, 3, 2, 3), (2, 3, 1, 3)])
def test_block_decomposition(N, M, n, k):
    total = sum(S_lambda_oracle(N, M, n, lam, 10**5).value for lam in partitions(k))
    direct = oracle_eval(LValueSpec.uniform(N, M, n, k), 10**5).value
    assert abs(total - direct) < 1e-9


def test_S_lambda_sums_permutations():
    lam = Partition((2, 1))
    parts = [strict_sum_oracle(2, 2, 2, r, 10**4).value for r in distinct_permutations(lam)]
    assert abs(S_lambda_oracle(2, 2, 2, lam, 10**4).value - sum(parts)) < 1e-20


def test_U_d():
    assert U_d_oracle(2, 2, 1, 0).value == 1
    assert abs(U_d_oracle(2, 2, 1, 1).value - zeta(2) / 4) < 1e-10
    # h_2 of x_m = 1/(2m)^2: (p_1^2 + p_2) / 2 with p_1 = zeta(2)/4, p_2 = zeta(4)/16
    expected = (zeta(2) ** 2 / 16 + zeta(4) / 16) / 2
    assert abs(U_d_oracle(2, 2, 1, 2).value - expected) < 1e-10
    for d in (1, 2, 3):
        assert abs(U_d_oracle(3, 3, 1, d, 10**5).value - U_d_symmetric(3, 3, 1, d, 10**5)) < 1e-10


def test_S_ones_is_elementary_symmetric():
    # e_2(x) = (p_1^2 - p_2)/2 with x_i = (-1)^i / i^2
    p1 = -zeta(2) / 2
    p2 = zeta(4)
    assert abs(S_ones_oracle(2, 2, 2).value - (p1**2 - p2) / 2) < 1e-10


def test_finite_partial_examples():
    assert finite_partial_S2(1, 1) == Fraction(-3, 4)
    assert finite_partial_S2(2, 1) == Fraction(-3, 16)
    for k in (1, 2, 3):
        for p in (1, 2, 3, 5):
            assert finite_partial_S2(k, p) == finite_S2_fractions(k, p)
    with pytest.raises(CapacityError):
        finite_partial_S2(7, 10)
    with pytest.raises(CapacityError):
        finite_partial_S2(1, 10**5 + 1)
    assert abs(float(finite_partial_S2(1, 1000)) + float(zeta(2)) / 2) < 1e-6
