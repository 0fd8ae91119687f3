"""Exact identities, checked for every index up to n_max."""
from __future__ import annotations

import random
from fractions import Fraction
from math import comb

from ..exact import Poly, binom, poly_eval
from ..modular import primes_in
from ..sequences import IntegrityError, SeqId, partial_weighted_sum
from .common import CheckContext, divisible
from .result import Mismatch, expect_equal

F, G, A = SeqId.FRANEL, SeqId.G, SeqId.APERY
FP, GP, AP = SeqId.FRANEL_POLY, SeqId.G_POLY, SeqId.APERY_POLY


def _cat(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def i01(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n in range(n_max + 1):
        via_franel = sum(comb(n, k) * comb(n + k, k) * s.value(F, k) for k in range(n + 1))
        expect_equal(s.value(A, n), via_franel, n=n, form="franel")
        alt = sum(comb(n + k, 2 * k) ** 2 * comb(2 * k, k) ** 2 for k in range(n + 1))
        expect_equal(s.value(A, n), alt, n=n, form="binom(n+k,2k)^2 binom(2k,k)^2")


def i02(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n in range(n_max + 1):
        lhs = sum(comb(n, k) * s.value(F, k) for k in range(n + 1))
        expect_equal(lhs, s.value(G, n), n=n)


def i03(ctx: CheckContext, n_max: int) -> None:
    for n in range(1, n_max + 1):
        lhs = Fraction(partial_weighted_sum("4k+3", G, n, store=ctx.store), 3 * n * n)
        rhs = sum(comb(n - 1, k) ** 2 * _cat(k) for k in range(n))
        expect_equal(lhs, rhs, n=n)


def i04(ctx: CheckContext, n_max: int) -> None:
    for n in range(1, n_max + 1):
        lhs = Fraction(partial_weighted_sum("3k+1", F, n, ratio=8, store=ctx.store), n * n)
        rhs = sum(
            comb(n - 1, k) ** 3 * (1 - Fraction(n, k + 1) + Fraction(n * n, (k + 1) ** 2))
            for k in range(n)
        )
        expect_equal(lhs, rhs, n=n)


def i05(ctx: CheckContext, n_max: int) -> None:
    rng = random.Random(ctx.seed)
    for run in range(3):
        x = [rng.randint(-9, 9) for _ in range(n_max + 1)]
        X = [sum(comb(n, k) * comb(n + k, k) * x[k] for k in range(n + 1)) for n in range(n_max + 1)]
        y = [sum(comb(n, k) * x[k] for k in range(n + 1)) for n in range(n_max + 1)]
        for n in range(n_max + 1):
            rhs = sum(comb(n, k) * comb(n + k, k) * (-1) ** (n - k) * y[k] for k in range(n + 1))
            expect_equal(X[n], rhs, run=run, n=n, part="forward")
        for n in range(1, n_max + 1):
            sign = (-1) ** (n - 1)
            lhs = Fraction(sign * sum((2 * k + 1) * X[k] for k in range(n)), n)
            rhs = sum(comb(n - 1, k) * comb(n + k, k) * (-1) ** k * y[k] for k in range(n))
            expect_equal(lhs, rhs, run=run, n=n, part="weighted inverse")
            lhs = Fraction(sign * sum((2 * k + 1) * (-1) ** k * X[k] for k in range(n)), n)
            rhs = sum(comb(n - 1, k) * comb(n + k, k) * x[k] for k in range(n))
            expect_equal(lhs, rhs, run=run, n=n, part="alternating weighted inverse")


def i06(ctx: CheckContext, n_max: int) -> None:
    for k in range(n_max):
        partial = 0
        for n in range(k + 1, n_max + 1):
            l = n - 1
            partial += (-1) ** l * (2 * l + 1) * comb(l + k, 2 * k)
            expect_equal(partial, (-1) ** (n - 1) * (n - k) * comb(n + k, 2 * k), k=k, n=n)


def i07(ctx: CheckContext, n_max: int) -> None:
    top = min(n_max, 8)
    for m in range(top + 1):
        for n in range(top + 1):
            for x in range(-2, 4):
                for y in range(-2, 4):
                    lhs = sum(
                        binom(m - x + y, k) * binom(n + x - y, n - k) * binom(x + k, m + n)
                        for k in range(n + 1)
                    )
                    expect_equal(lhs, binom(x, m) * binom(y, n), m=m, n=n, x=x, y=y)


def i08(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n in range(n_max + 1):
        lhs = sum((s.poly(FP, k) * comb(n, k) for k in range(n + 1)), Poly())
        expect_equal(lhs, s.poly(GP, n), n=n, direction="g from f")
        inv = sum((s.poly(GP, k) * (comb(n, k) * (-1) ** (n - k)) for k in range(n + 1)), Poly())
        expect_equal(s.poly(FP, n), inv, n=n, direction="f from g")


def i09(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n in range(n_max + 1):
        w = [comb(n, k) * comb(n + k, k) for k in range(n + 1)]
        via_f = sum((s.poly(FP, k) * w[k] for k in range(n + 1)), Poly())
        expect_equal(s.poly(AP, n), via_f, n=n, form="via f_k")
        via_g = sum((s.poly(GP, k) * (w[k] * (-1) ** (n - k)) for k in range(n + 1)), Poly())
        expect_equal(s.poly(AP, n), via_g, n=n, form="via g_k")


def _normalized_apery_sums(ctx: CheckContext, n_max: int, alternating: bool):
    """Yield (n, S_n) with S_n = sum_{k<n} (2k+1) (+-1)^k A_k(x)."""
    total = Poly()
    for n in range(1, n_max + 1):
        k = n - 1
        total = total + ctx.store.poly(AP, k) * ((2 * k + 1) * ((-1) ** k if alternating else 1))
        yield n, total


def _integral_quotient(total: Poly, n: int, **where) -> Poly:
    try:
        return total.exact_div(n)
    except ArithmeticError as exc:
        raise Mismatch(**where, n=n, reason=str(exc), value=str(total)) from None


def i10(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n, total in _normalized_apery_sums(ctx, n_max, alternating=False):
        lhs = _integral_quotient(total, n) * (-1) ** (n - 1)
        rhs = sum(
            (s.poly(GP, k) * (comb(n - 1, k) * comb(n + k, k) * (-1) ** k) for k in range(n)),
            Poly(),
        )
        expect_equal(lhs, rhs, n=n)


def i11(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n, total in _normalized_apery_sums(ctx, n_max, alternating=True):
        lhs = _integral_quotient(total, n) * (-1) ** (n - 1)
        rhs = sum((s.poly(FP, k) * (comb(n - 1, k) * comb(n + k, k)) for k in range(n)), Poly())
        expect_equal(lhs, rhs, n=n)


def i12(ctx: CheckContext, n_max: int) -> None:
    for n in range(1, n_max + 1):
        total = partial_weighted_sum("6k^3+9k^2+5k+1", A, n, sign=-1, store=ctx.store)
        divisible(total, n**3, n=n)


def i13(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for n in range(1, n_max + 1):
        total = sum(comb(n - 1, k) * comb(n + k, k) * (3 * k + 2) * s.value(F, k) for k in range(n))
        divisible(total, n * n, n=n)


def i14(ctx: CheckContext, n_max: int) -> None:
    for m in range(1, n_max + 1):
        total = partial_weighted_sum("3k+2", F, m, sign=-1, store=ctx.store)
        divisible(total, m * m, m=m)
        try:
            a_m = ctx.store.value(SeqId.A_NORMALIZED, m)
        except IntegrityError as exc:
            raise Mismatch(m=m, reason=str(exc)) from None
        expect_equal(a_m * m * m, total, m=m)


def i15(ctx: CheckContext, n_max: int) -> None:
    f = ctx.store.values(F, n_max + 1)
    for n in range(1, n_max):
        lhs = (n + 1) ** 2 * f[n + 1]
        rhs = (7 * n * (n + 1) + 2) * f[n] + 8 * n * n * f[n - 1]
        expect_equal(lhs, rhs, n=n)
    for n in range(n_max + 1):
        try:
            rec = ctx.store.by_recurrence(F, n)
        except IntegrityError as exc:
            raise Mismatch(n=n, reason=str(exc)) from None
        expect_equal(rec, f[n], n=n, route="recurrence")


def i16(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store.values(SeqId.S_GNEG1, n_max + 1)
    for n in range(0, n_max - 2):
        total = (
            (n + 3) ** 2 * (4 * n + 5) * s[n + 3]
            + (20 * n**3 + 125 * n**2 + 254 * n + 165) * s[n + 2]
            + (76 * n**3 + 399 * n**2 + 678 * n + 375) * s[n + 1]
            - 25 * (n + 1) ** 2 * (4 * n + 9) * s[n]
        )
        expect_equal(total, 0, n=n)
    for n in range(n_max + 1):
        try:
            rec = ctx.store.by_recurrence(SeqId.S_GNEG1, n)
        except IntegrityError as exc:
            raise Mismatch(n=n, reason=str(exc)) from None
        expect_equal(rec, s[n], n=n, route="recurrence")


def i17(ctx: CheckContext, n_max: int) -> None:
    left = [None] + [
        Fraction(partial_weighted_sum("4k+3", G, n, store=ctx.store), 3 * n * n)
        for n in range(1, n_max + 1)
    ]
    right = [None] + [sum(comb(n - 1, k) ** 2 * _cat(k) for k in range(n)) for n in range(1, n_max + 1)]
    for side, u in (("left side", left), ("right side", right)):
        for n in range(1, n_max - 2):
            lhs = (n + 2) * (n + 3) ** 2 * (2 * n + 3) * u[n + 3]
            rhs = (
                (n + 2) * (22 * n**3 + 121 * n**2 + 211 * n + 120) * u[n + 2]
                - (n + 1) * (38 * n**3 + 171 * n**2 + 229 * n + 102) * u[n + 1]
                + 9 * n * n * (n + 1) * (2 * n + 5) * u[n]
            )
            expect_equal(lhs, rhs, n=n, sequence=side)


def i18(ctx: CheckContext, n_max: int) -> None:
    for n, total in _normalized_apery_sums(ctx, n_max, alternating=False):
        _integral_quotient(total, n)


def i19(ctx: CheckContext, n_max: int) -> None:
    for n, total in _normalized_apery_sums(ctx, n_max, alternating=True):
        _integral_quotient(total, n)


def _w3(l: int) -> int:
    return 6 * l**3 + 9 * l**2 + 5 * l + 1


def i20(ctx: CheckContext, n_max: int) -> None:
    s = ctx.store
    for k in range(n_max):
        partial = 0
        for n in range(k + 1, n_max + 1):
            l = n - 1
            partial += (-1) ** l * _w3(l) * comb(l + k, 2 * k)
            rhs = (-1) ** (n - 1) * (n - k) * (3 * n * n - 3 * k - 2) * comb(n + k, 2 * k)
            expect_equal(partial, rhs, k=k, n=n, part="inner sum")
    total = Poly()
    for n in range(1, n_max + 1):
        # sum_{l<n} (-1)^l w(l) A_l(x); the (-1)^n factor is applied below
        l = n - 1
        total = total + s.poly(AP, l) * ((-1) ** l * _w3(l))
        try:
            lhs = total.exact_div(n) * (-1) ** n
        except ArithmeticError as exc:
            raise Mismatch(n=n, part="reduction", reason=str(exc)) from None
        rhs = sum(
            (s.poly(FP, k) * (comb(n - 1, k) * comb(n + k, k) * (3 * k + 2 - 3 * n * n)) for k in range(n)),
            Poly(),
        )
        expect_equal(lhs, rhs, n=n, part="reduction")
    for n in range(2, n_max + 1):
        for k in range(1, n):
            b = binom(n - 1, k - 1) * binom(-n - 1, k - 1)
            lhs = b - binom(n - 1, k) * binom(-n - 1, k)
            expect_equal(Fraction(lhs), Fraction(n * n, k * k) * b, n=n, k=k, part="binomial difference")
    a = [s.value(SeqId.A_NORMALIZED, m) for m in range(n_max + 1)]
    for n in range(1, n_max):
        lhs = sum(comb(n - 1, k) * comb(n + k, k) * (3 * k + 2) * s.value(F, k) for k in range(n))
        rhs = sum(
            binom(n - 1, k) * binom(-n - 1, k) * ((k + 1) ** 2 * a[k + 1] - k * k * a[k]) for k in range(n)
        )
        expect_equal(lhs, rhs, n=n, part="a_k rewrite")


def i21(ctx: CheckContext, n_max: int) -> None:
    for k in range(n_max):
        partial = 0
        for m in range(k + 1, n_max + 1):
            n = m - 1
            partial += (2 * n + 1) * comb(n + k, 2 * k)
            expect_equal(partial, Fraction(m * (m - k), k + 1) * comb(m + k, 2 * k), k=k, m=m)


def shifted_u(k: int, p: int) -> int:
    """u_k = sum_{r<p} binom(-k, r) binom(-k-1, r), by running products."""
    total, b1, b2 = 0, 1, 1
    for r in range(p):
        if r:
            b1 = b1 * (-k - r + 1) // r
            b2 = b2 * (-k - r) // r
        total += b1 * b2
    return total


def i22(ctx: CheckContext, n_max: int) -> None:
    for p in primes_in(2, max(n_max, 2)):
        u = [shifted_u(k, p) for k in range(n_max + 2)]
        seed = (p * p + p) // 2
        expect_equal(u[1], binom(p + 1, p - 1), p=p, part="seed")
        expect_equal(u[1], seed, p=p, part="seed")
        expect_equal(u[1], (-1) ** (p - 1) * binom(-3, p - 1), p=p, part="seed via Chu-Vandermonde")
        for k in range(n_max + 1):
            lhs = k * (k + 1) ** 2 * (2 * (2 * k + 1) * u[k + 1] - k * u[k])
            poly = 2 * k * p + p + 3 * k * k + 3 * k + 1
            mid = (p + k) * (p + k - 1) * poly * binom(-1 - k, p - 1) * binom(-k, p - 1)
            rhs = p * p * comb(p + k, p) * comb(p + k - 1, p) * poly
            expect_equal(lhs, mid, p=p, k=k, part="recurrence")
            expect_equal(mid, rhs, p=p, k=k, part="recurrence closed form")


BODIES = {
    "I01": i01, "I02": i02, "I03": i03, "I04": i04, "I05": i05, "I06": i06,
    "I07": i07, "I08": i08, "I09": i09, "I10": i10, "I11": i11, "I12": i12,
    "I13": i13, "I14": i14, "I15": i15, "I16": i16, "I17": i17, "I18": i18,
    "I19": i19, "I20": i20, "I21": i21, "I22": i22,
}
