from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.exact import Poly, binom, poly_eval, poly_mul, rat_inv

small = st.integers(-30, 30)
coeffs = st.lists(st.integers(-50, 50) | st.fractions(max_denominator=20).map(Fraction), max_size=6)


def falling(n, k):
    return prod(n - i for i in range(k))


@given(n=st.integers(-40, 40), k=st.integers(0, 12))
def test_binom_matches_falling_factorial(n, k):
    assert binom(n, k) * prod(range(1, k + 1)) == falling(n, k)


@given(n=st.integers(0, 40), k=st.integers(0, 12))
def test_negative_upper_index(n, k):
    assert binom(-n - 1, k) == (-1) ** k * comb(n + k, k)


def test_binom_rejects_negative_k():
    with pytest.raises(ValueError):
        binom(5, -1)


def test_binom_edges():
    assert binom(0, 0) == 1
    assert binom(3, 5) == 0
    assert binom(-1, 3) == -1


def test_poly_trims_and_degree():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly().degree is None and Poly([0, 0]).is_zero()
    assert Poly.monomial(3, 7).degree == 3


def test_poly_format():
    assert Poly([1, 8, 6]).format() == "1 + 8*x + 6*x^2"
    assert Poly([0, -1]).format("y") == "-y"
    assert Poly().format() == "0"


def test_poly_equals_scalars():
    assert Poly([5]) == 5
    assert Poly([Fraction(1, 2)]) == Fraction(1, 2)
    assert Poly() == 0
    assert Poly([1, 1]) != 1


@given(a=coeffs, b=coeffs, x=small)
def test_poly_ring_homomorphism(a, b, x):
    pa, pb = Poly(a), Poly(b)
    assert (pa + pb)(x) == pa(x) + pb(x)
    assert (pa - pb)(x) == pa(x) - pb(x)
    assert (pa * pb)(x) == pa(x) * pb(x)
    assert poly_mul(pa, pb) == pa * pb


@given(a=coeffs, x=small)
def test_horner_matches_power_sum(a, x):
    assert poly_eval(a, x) == sum(c * x**j for j, c in enumerate(a))


def test_exact_div():
    assert Poly([6, 9, 3]).exact_div(3) == Poly([2, 3, 1])
    with pytest.raises(ArithmeticError, match="x\\^1"):
        Poly([6, 10]).exact_div(3)


def test_integrality():
    assert Poly([1, 2]).is_integral()
    assert not Poly([1, Fraction(1, 2)]).is_integral()


def test_rat_inv_zero():
    with pytest.raises(ZeroDivisionError):
        rat_inv(0)
    assert rat_inv(Fraction(-2, 3)) == Fraction(-3, 2)
