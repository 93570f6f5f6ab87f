from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from oracles import bernoulli_akiyama_tanigawa, binomial_pascal
from pmlv import constants
from pmlv.errors import CapacityError
from pmlv.rational import BernoulliTable, Rational, bernoulli, binomial, factorial

rationals = st.fractions(max_denominator=10**6).filter(lambda q: abs(q.numerator) < 10**12)


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == Fraction(-1, 2)
    assert bernoulli(2) == Fraction(1, 6)
    assert bernoulli(12) == Fraction(-691, 2730)
    assert bernoulli(7) == 0


def test_bernoulli_matches_second_algorithm():
    for m in [0] + list(range(2, 61)):
        assert bernoulli(m) == bernoulli_akiyama_tanigawa(m), m


def test_table_recurrence_and_odd_zeros():
    table = BernoulliTable(80)
    values = table.values
    assert values[0] == 1
    for m in range(1, 40):
        assert values[2 * m + 1] == 0
    for n in range(1, 80):
        assert sum(binomial(n + 1, j) * values[j] for j in range(n + 1)) == 0


def test_capacity_error():
    table = BernoulliTable(10)
    with pytest.raises(CapacityError):
        table[11]
    with pytest.raises(CapacityError):
        bernoulli(201)
    assert BernoulliTable(300)[250] == bernoulli(250, BernoulliTable(260))


def test_factorial_and_binomial():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(20) == 2432902008176640000
    assert binomial(4, 2) == 6
    assert binomial(7, 0) == 1
    assert binomial(10, 5) == 252
    for n in range(15):
        for k in range(n + 3):
            assert binomial(n, k) == binomial_pascal(n, k)
    assert binomial(Fraction(1, 2), 2) == Fraction(-1, 8)


@given(rationals, rationals)
def test_rational_roundtrip(a, b):
    assert (a + b) - b == a
    if b:
        assert (a * b) / b == a
    s = Rational(a) + Rational(b)
    assert gcd(abs(s.numerator), s.denominator) == 1 and s.denominator >= 1


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_schoolbook_addition(p, q, r, s):
    assume(q and s)
    assert Rational(p, q) + Rational(r, s) == Fraction(p * s + r * q, q * s)


def test_euler_even_zeta_formula():
    with mpmath.workdps(50):
        for m in range(1, 11):
            lhs = constants.zeta(2 * m, 50)
            rhs = ((-1) ** (m - 1) * 2 ** (2 * m - 1) * constants.to_mpf(bernoulli(2 * m))
                   * constants.pi(50) ** (2 * m) / factorial(2 * m))
            assert abs(lhs - rhs) < mpmath.mpf(10) ** -30
