from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from goddard import ZeroDenominator, binomial, factorial, rational_make, render


def pascal_rows(n_max):
    """Independent binomial oracle: Pascal's triangle by additions only."""
    rows = [[1]]
    for n in range(1, n_max + 1):
        prev = rows[-1]
        rows.append([1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1])
    return rows


def product_factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


PASCAL = pascal_rows(60)


@pytest.mark.parametrize(
    "num, den, expected",
    [(2, 4, (1, 2)), (3, -6, (-1, 2)), (0, 7, (0, 1)), (-4, -8, (1, 2))],
)
def test_rational_make_canonical(num, den, expected):
    r = rational_make(num, den)
    assert (r.numerator, r.denominator) == expected


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rational_make(5, 0)
    with pytest.raises(ZeroDivisionError):
        rational_make(0, 0)


def test_render():
    assert render(rational_make(-1, 12)) == "-1/12"
    assert render(rational_make(6, 3)) == "2"
    assert render(rational_make(0, 5)) == "0"
    assert render(rational_make(1, 2)) == "1/2"


def test_binomial_examples():
    assert binomial(3, 0) == 1
    assert binomial(5, 2) == PASCAL[5][2] == 10
    assert binomial(3, 5) == 0


def test_binomial_matches_pascal_exhaustively():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)
            assert binomial(n, k) == PASCAL[n][k]


def test_binomial_factorial_quotient():
    for n in range(41):
        for k in range(n + 1):
            assert binomial(n, k) == factorial(n) // (factorial(k) * factorial(n - k))
            assert binomial(n, k) * factorial(k) * factorial(n - k) == factorial(n)


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(5) == product_factorial(5) == 120
    assert factorial(7) == product_factorial(7) == 5040
    assert all(factorial(n) == product_factorial(n) for n in range(90))


def test_negative_arguments_rejected():
    with pytest.raises(ValueError):
        binomial(-1, 0)
    with pytest.raises(ValueError):
        factorial(-2)


def test_distributivity_random_triples(rng):
    bound = 10**6
    for _ in range(500):
        a, b, c = (
            rational_make(rng.randint(-bound, bound), rng.randint(1, bound) * rng.choice((1, -1)))
            for _ in range(3)
        )
        assert a * (b + c) == a * b + a * c
        assert a + (-a) == 0
        for r in (a * b, a + c, -b):
            assert r.denominator >= 1


@given(st.integers(), st.integers().filter(bool))
def test_canonical_form_invariants(num, den):
    r = rational_make(num, den)
    assert r.denominator >= 1
    assert Fraction(num, den) == r
    from math import gcd

    assert gcd(abs(r.numerator), r.denominator) == 1
    if num == 0:
        assert render(r) == "0"
