"""Exact identities over Laurent polynomials in q."""
from __future__ import annotations

from ..exact import binom
from ..qseries import (
    QLaurent,
    a_q,
    g_q,
    q_binom,
    q_binom_product,
    expansion_coefficient,
    expansion_rhs,
)
from ..sequences import SeqId
from .common import CheckContext
from .result import expect_equal


def q01(ctx: CheckContext, n_max: int) -> None:
    for n in range(n_max + 1):
        lhs, rhs = a_q(n), expansion_rhs(n)
        expect_equal(lhs, rhs, n=n)


def q02(ctx: CheckContext, n_max: int) -> None:
    for n in range(n_max + 1):
        for j in range(n + 1):
            lhs, rhs = expansion_coefficient(n, j)
            expect_equal(lhs, rhs, n=n, j=j)


def q03(ctx: CheckContext, n_max: int) -> None:
    for m in range(n_max + 1):
        for k in range(n_max + 1):
            by_product = q_binom_product(-m - 1, k)
            law = (q_binom(m + k, k) * (-1) ** k).shift(-k * m - k * (k + 1) // 2)
            expect_equal(by_product, law, m=m, k=k, part="negative index law")
            expect_equal(q_binom(-m - 1, k), by_product, m=m, k=k, part="reduction vs product")
    for n in range(n_max + 1):
        for k in range(n + 1):
            expect_equal(q_binom(n, k), q_binom_product(n, k), n=n, k=k, part="Pascal vs product")


def q04(ctx: CheckContext, n_max: int) -> None:
    for n in range(n_max + 1):
        for j in range(n + 1):
            lhs = sum(
                (
                    (q_binom(-n - 1 - j, k - j) * q_binom(n - j, n - k)).shift((k - j) ** 2)
                    for k in range(j, n + 1)
                ),
                QLaurent(),
            )
            expect_equal(lhs, q_binom(-2 * j - 1, n - j), n=n, j=j, part="q-Chu-Vandermonde")
            for k in range(j, n + 1):
                left = q_binom(-n - 1, k) * q_binom(k, j)
                right = q_binom(-n - 1, j) * q_binom(-n - 1 - j, k - j)
                expect_equal(left, right, n=n, j=j, k=k, part="product rule")
            combined = sum(
                (
                    (q_binom(-n - 1, k) * q_binom(k, j) * q_binom(n - j, k - j)).shift((k - j) ** 2)
                    for k in range(j, n + 1)
                ),
                QLaurent(),
            )
            target = q_binom(-n - 1, j) * q_binom(-2 * j - 1, n - j)
            expect_equal(combined, target, n=n, j=j, part="combined")


def q05(ctx: CheckContext, n_max: int) -> None:
    for n in range(-n_max, n_max + 1):
        for k in range(n_max + 1):
            expect_equal(q_binom(n, k).at_one(), binom(n, k), n=n, k=k, part="binomial")
    for n in range(n_max + 1):
        expect_equal(g_q(n).at_q_one(), ctx.store.poly(SeqId.G_POLY, n), n=n, part="g_n(x;1)")
        expect_equal(a_q(n).at_q_one(), ctx.store.poly(SeqId.APERY_POLY, n), n=n, part="A_n(x;1)")


BODIES = {"Q01": q01, "Q02": q02, "Q03": q03, "Q04": q04, "Q05": q05}
