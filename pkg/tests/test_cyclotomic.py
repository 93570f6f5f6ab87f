from fractions import Fraction
from itertools import product

import mpmath
from hypothesis import given
from hypothesis import strategies as st

from oracles import plethysm_h_coefficients, poly_h, poly_mul
from pmlv.cyclotomic import (
    CyclotomicNumber,
    complex_eval,
    cyclotomic_polynomial,
    monomial_at_roots,
    power_sum_roots,
    root_of_unity,
)
from pmlv.partitions import Partition, partitions

P = Partition


@st.composite
def cyclo(draw, order=None):
    m = order or draw(st.sampled_from([1, 2, 3, 4, 5, 6, 8, 12]))
    terms = draw(st.lists(st.tuples(st.integers(-5, 5), st.integers(0, 30)), max_size=4))
    z = CyclotomicNumber.rational(0, m)
    for c, e in terms:
        z = z + root_of_unity(m, e) * c
    return z


def test_roots_examples():
    assert root_of_unity(2, 1) == -1
    assert root_of_unity(4, 2) == -1
    for n in range(1, 8):
        assert root_of_unity(n, 0) == 1
    assert root_of_unity(5, 7) == root_of_unity(5, 2)
    assert root_of_unity(5, -1) == root_of_unity(5, 4)


def test_root_powers_and_minimal_polynomial():
    for m in range(1, 25):
        w = root_of_unity(m, 1)
        assert w**m == 1
        phi = cyclotomic_polynomial(m)
        acc = CyclotomicNumber.rational(0, m)
        for j, c in enumerate(phi):
            acc = acc + w**j * c
        assert acc.is_zero()


def test_complex_eval_examples():
    with mpmath.workdps(30):
        assert abs(complex_eval(root_of_unity(2, 1), 20) + 1) < 1e-18
        assert abs(complex_eval(root_of_unity(4, 1), 20) - 1j) < 1e-18
        assert abs(complex_eval(root_of_unity(3, 1) + root_of_unity(3, 2), 20) + 1) < 1e-18
    for m in range(1, 13):
        for e in range(m):
            with mpmath.workdps(40):
                ref = mpmath.expjpi(mpmath.mpf(2 * e) / m)
                assert abs(complex_eval(root_of_unity(m, e), 30) - ref) < mpmath.mpf(10) ** -28


def test_power_sums():
    assert power_sum_roots(3, 6) == 3
    assert power_sum_roots(3, 4) == 0
    assert power_sum_roots(1, 7) == 1
    for n in range(1, 9):
        for m in range(-10, 11):
            direct = CyclotomicNumber.rational(0, n)
            for j in range(n):
                direct = direct + root_of_unity(n, j * m)
            assert direct == power_sum_roots(n, m)


@given(cyclo(order=12), cyclo(order=12), cyclo(order=12))
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(cyclo(), cyclo())
def test_mixed_order_products_embed(a, b):
    with mpmath.workdps(40):
        lhs = complex_eval(a * b, 30)
        rhs = complex_eval(a, 30) * complex_eval(b, 30)
        assert abs(lhs - rhs) < mpmath.mpf(10) ** -25


def test_monomial_examples():
    for k in range(1, 5):
        assert monomial_at_roots(P((k,)), 1) == 1
    assert monomial_at_roots(P((1, 1)), 1) == 0
    assert monomial_at_roots(P((2,)), 2) == 2
    assert monomial_at_roots(P((1, 1)), 2) == -1
    assert monomial_at_roots(P((2, 2)), 2) == 1


def test_monomial_is_plethysm_coefficient():
    for n in (1, 2, 3):
        for k in (1, 2, 3):
            coeffs = plethysm_h_coefficients(n, k)
            for lam in partitions(n * k):
                value = monomial_at_roots(lam, n)
                assert isinstance(value, (int, Fraction)) and Fraction(value).denominator == 1
                assert value == coeffs[lam.parts], (n, k, lam)


def test_plethysm_in_2n_variables():
    # sum_lambda <p_n o h_k, m_lambda> h_lambda(x_1..x_{2n}) = h_k(x_1^n, ..., x_{2n}^n)
    for n in (1, 2, 3):
        V = 2 * n
        for k in (1, 2, 3):
            lhs = {}
            for lam in partitions(n * k):
                c = monomial_at_roots(lam, n)
                if not c:
                    continue
                h = {(0,) * V: 1}
                for part in lam:
                    h = poly_mul(h, poly_h(part, V))
                for e, v in h.items():
                    lhs[e] = lhs.get(e, 0) + c * v
            lhs = {e: v for e, v in lhs.items() if v}
            rhs = {tuple(n * x for x in e): v for e, v in poly_h(k, V).items()}
            assert lhs == rhs, (n, k)


def test_monomial_zero_for_long_partitions():
    for lam in partitions(6):
        if len(lam) > 3:
            assert monomial_at_roots(lam, 3) == 0


def test_equality_is_canonical():
    w = root_of_unity(6, 1)
    assert w * w - w + 1 == 0
    assert hash(root_of_unity(3, 1) + root_of_unity(3, 2)) == hash(CyclotomicNumber.rational(-1, 3))
    for a, b in product(range(6), repeat=2):
        assert (root_of_unity(6, a) == root_of_unity(6, b)) == (a == b)
