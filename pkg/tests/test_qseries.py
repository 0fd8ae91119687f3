from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from supercong.exact import Poly, binom
from supercong.qseries import (
    QLaurent,
    QXPoly,
    a_q,
    g_q,
    q_binom,
    q_binom_product,
    q_int,
    expansion_coefficient,
    expansion_rhs,
    verify_expansion,
)
from supercong.sequences import SeqId, seq_poly

ONE_PLUS_Q = QLaurent([1, 1])


def test_laurent_basics():
    a = QLaurent([1, 2], -1)
    assert str(a) == "q^-1 + 2"
    assert a.at_one() == 3
    assert (a * a).at_one() == 9
    assert a - a == 0 and (a - a).is_zero()
    assert QLaurent([0, 0, 3], -2) == QLaurent([3])
    assert str(q_int(-2)) == "-q^-2 - q^-1"
    assert q_int(3) == QLaurent([1, 1, 1])


def test_exact_division():
    assert (q_int(6)).exact_div(q_int(3)) == QLaurent([1, 0, 0, 1])
    with pytest.raises(ArithmeticError):
        q_int(5).exact_div(q_int(2))


@given(n=st.integers(0, 14), k=st.integers(0, 14))
def test_q_binom_two_routes(n, k):
    assert q_binom(n, k) == q_binom_product(n, k)
    assert q_binom(n, k).at_one() == comb(n, k)


@given(n=st.integers(1, 14), k=st.integers(1, 14))
def test_second_pascal_rule(n, k):
    assert q_binom(n, k) == q_binom(n - 1, k - 1).shift(n - k) + q_binom(n - 1, k)


@given(m=st.integers(0, 10), k=st.integers(0, 8))
def test_negative_index_at_one(m, k):
    assert q_binom(-m - 1, k).at_one() == binom(-m - 1, k)
    assert q_binom(-m - 1, k) == q_binom_product(-m - 1, k)


def test_a1_anchor():
    # A_1(x;q) = q^2 + (1+q)^2 x
    assert a_q(1) == QXPoly([QLaurent([0, 0, 1]), ONE_PLUS_Q * ONE_PLUS_Q])


@pytest.mark.parametrize("n", range(8))
def test_q_to_one(n):
    assert g_q(n).at_q_one() == seq_poly(SeqId.G_POLY, n)
    assert a_q(n).at_q_one() == seq_poly(SeqId.APERY_POLY, n)


@pytest.mark.parametrize("n", range(8))
def test_expansion_identity(n):
    assert a_q(n) == expansion_rhs(n)
    for j in range(n + 1):
        lhs, rhs = expansion_coefficient(n, j)
        assert lhs == rhs
    assert verify_expansion(n).status.value == "PASS"


def test_qxpoly_ops():
    p = QXPoly([1, QLaurent([0, 1])])
    assert (p + p) == p.scale(2)
    assert p.at_q_one() == Poly([1, 1])
    assert str(QXPoly()) == "0"
