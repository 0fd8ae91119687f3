"""Congruences modulo powers of a single prime p.

Each body receives one admitted prime and raises Mismatch on the first
failing instance.  Rational operands are read in Z/p^e.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..modular import bernoulli, euler_number, harmonic, legendre
from ..sequences import SeqId
from .common import CheckContext, ResiduePoly, congruent, poly_congruent
from .identities import shifted_u
from .result import Mismatch

F, G, A = SeqId.FRANEL, SeqId.G, SeqId.APERY
FP, GP, AP = SeqId.FRANEL_POLY, SeqId.G_POLY, SeqId.APERY_POLY
S = SeqId.S_GNEG1


def fq(a: int, p: int) -> int:
    """Exact Fermat quotient (a^(p-1) - 1)/p."""
    return (a ** (p - 1) - 1) // p


def _leg3(p: int) -> int:
    # (p/3)
    return legendre(p, 3)


def c01(ctx: CheckContext, p: int) -> None:
    if ctx.wants("a"):
        congruent(comb(2 * p - 1, p - 1), 1, p, 3, part="a")
    if ctx.wants("b"):
        congruent(harmonic(p - 1, 1), 0, p, 2, part="b")
    if ctx.wants("c"):
        congruent(harmonic(p - 1, 2), 0, p, 1, part="c")


def c02(ctx: CheckContext, p: int) -> None:
    lhs, rhs = ResiduePoly(p, 4), ResiduePoly(p, 4)
    for k in range(p):
        h2 = harmonic(k, 2)
        lhs.add(ctx.store.poly(GP, k), 1 - p * p * h2)
        rhs.add_term(k, Fraction(p, 2 * k + 1) * (1 - 2 * p * p * h2))
    poly_congruent(lhs, rhs, ctx)


def c03(ctx: CheckContext, p: int) -> None:
    g = ctx.store.values(G, p)
    lhs = sum(g[1:])
    rhs = p * p * sum(g[k] * harmonic(k, 2) for k in range(1, p)) + Fraction(7, 6) * p**3 * bernoulli(p - 3)
    congruent(lhs, rhs, p, 4)


def c04(ctx: CheckContext, p: int) -> None:
    s = ctx.store.values(S, p)
    lhs = sum(s)
    rhs = legendre(-1, p) + p * p * (sum(s[k] * harmonic(k, 2) for k in range(p)) - euler_number(p - 3))
    congruent(lhs, rhs, p, 3)


def c05(ctx: CheckContext, p: int) -> None:
    lhs = sum(ctx.store.at(GP, k, -3) for k in range(p))
    congruent(lhs, _leg3(p), p, 2)


def _g_over_k(ctx: CheckContext, p: int, e: int) -> ResiduePoly:
    side = ResiduePoly(p, e)
    for k in range(1, p):
        side.add(ctx.store.poly(GP, k), Fraction(1, k))
    return side


def c06(ctx: CheckContext, p: int) -> None:
    poly_congruent(_g_over_k(ctx, p, 1), ResiduePoly(p, 1), ctx)


def c07(ctx: CheckContext, p: int) -> None:
    g = ctx.store.values(G, p)
    lhs = sum(Fraction(g[k - 1], k) for k in range(1, p))
    congruent(lhs, -_leg3(p) * 2 * fq(3, p), p, 1)


def c08(ctx: CheckContext, p: int) -> None:
    lhs = sum(k * ctx.store.value(G, k) for k in range(1, p))
    congruent(lhs, Fraction(-3, 4), p, 2)


def c09(ctx: CheckContext, p: int) -> None:
    lhs = sum(Fraction(ctx.store.value(S, k), k * k) for k in range(1, p))
    congruent(lhs, 0, p, 1)


def c10(ctx: CheckContext, p: int) -> None:
    lhs = sum(Fraction(ctx.store.value(S, k), k) for k in range(1, p))
    congruent(lhs, 0, p, 2)


def c11(ctx: CheckContext, p: int) -> None:
    lhs = sum((-1) ** k * ctx.store.at(FP, k, -1) * harmonic(k, 1) / k for k in range(1, p))
    congruent(lhs, -2 * legendre(-1, p) * euler_number(p - 3), p, 1)


def c12(ctx: CheckContext, p: int) -> None:
    lhs = sum(Fraction((3 * k + 1) * ctx.store.value(F, k), 8**k) for k in range(p))
    q = fq(2, p)
    congruent(lhs, p**2 - 2 * p**3 * q + 4 * p**4 * q * q, p, 5)


def c13(ctx: CheckContext, p: int) -> None:
    g = ctx.store.values(G, p)
    for k in range(p):
        congruent(g[k], _leg3(p) * 9**k * g[p - 1 - k], p, 1, k=k)


def c14(ctx: CheckContext, p: int) -> None:
    g = ctx.store.values(G, p)
    lhs = sum(Fraction(g[k], k * 9**k) for k in range(1, p))
    congruent(lhs, 2 * fq(3, p), p, 1)


def c15(ctx: CheckContext, p: int) -> None:
    lhs, rhs = ResiduePoly(p, 2), ResiduePoly(p, 2)
    for k in range(p):
        lhs.add(ctx.store.poly(AP, k))
        rhs.add(ctx.store.poly(FP, k), Fraction(p * (-1) ** k, 2 * k + 1))
    poly_congruent(lhs, rhs, ctx)


def c16(ctx: CheckContext, p: int) -> None:
    lhs, rhs = ResiduePoly(p, 2), ResiduePoly(p, 2)
    for k in range(p):
        lhs.add(ctx.store.poly(AP, k), (-1) ** k)
        rhs.add(ctx.store.poly(GP, k), Fraction(p, 2 * k + 1))
    poly_congruent(lhs, rhs, ctx)


def _odd_power_apery_sum(ctx: CheckContext, p: int, power: int) -> int:
    return sum((2 * k + 1) ** power * (-1) ** k * ctx.store.value(A, k) for k in range(p))


# c_r for the sums of (2k+1)^(2r+1) (-1)^k A_k, r = 0..3
KNOWN_C = (Fraction(1), Fraction(-1, 3), Fraction(-13, 27), Fraction(5, 9))


def _apery_odd(r: int):
    def body(ctx: CheckContext, p: int) -> None:
        lhs = _odd_power_apery_sum(ctx, p, 2 * r + 1)
        congruent(lhs, KNOWN_C[r] * p * _leg3(p), p, 3)

    body.__name__ = f"c{17 + r}"
    return body


c17, c18, c19, c20 = (_apery_odd(r) for r in range(4))


def c21(ctx: CheckContext, p: int) -> None:
    # exact integer coefficients first, then divide by p
    acc: list[int] = [0] * p
    for k in range(p):
        for j, c in enumerate(ctx.store.poly(AP, k).coeffs):
            acc[j] += (2 * k + 1) * c
    quotient = []
    for j, c in enumerate(acc):
        q, r = divmod(c, p)
        if r:
            raise Mismatch(p=p, coefficient=j, reason="sum not divisible by p", remainder=r)
        quotient.append(q)
    lhs = ResiduePoly(p, 4)
    lhs.add(quotient)
    rhs = ResiduePoly(p, 4)
    for k in range(p):
        rhs.add(ctx.store.poly(GP, k), 1 - p * p * harmonic(k, 2))
    poly_congruent(lhs, rhs, ctx)


def c22(ctx: CheckContext, p: int) -> None:
    prod_num = 1  # prod_{j<=k} (j^2 - p^2)
    fact = 1
    for k in range(p):
        if k:
            prod_num *= k * k - p * p
            fact *= k
        value = (-1) ** k * comb(p - 1, k) * comb(p + k, k)
        if value * fact * fact != prod_num:
            raise Mismatch(p=p, k=k, part="product form", lhs=value, rhs=str(Fraction(prod_num, fact * fact)))
        congruent(value, 1 - p * p * harmonic(k, 2), p, 4, k=k)


def c23(ctx: CheckContext, p: int) -> None:
    g_last = ctx.store.value(G, p - 1)
    congruent(g_last, _leg3(p) * (1 + 2 * p * fq(3, p)), p, 2, part="main")
    via = sum(comb(2 * p - 1, k) * (-1) ** k * comb(2 * k, k) for k in range(p))
    congruent(g_last, via, p, 2, part="binomial reduction")
    congruent(via, _leg3(p) * (2 * 3 ** (p - 1) - 1), p, 2, part="closed form")


def c24(ctx: CheckContext, p: int) -> None:
    lhs = sum(Fraction(p * (-3) ** k, 2 * k + 1) for k in range(p))
    congruent(lhs, _leg3(p) if p != 3 else 0, p, 2)


def c25(ctx: CheckContext, p: int) -> None:
    m = p * p
    for k in range(1, p):
        # binom(-k,r) binom(-k-1,r) = B^2 (k+r)/k with B = binom(k+r-1, r)
        inv_k = pow(k, -1, m)
        b, u = 1, 0
        for r in range(p):
            if r:
                b = b * (k + r - 1) % m * pow(r, -1, m) % m
            u += b * b % m * (k + r) % m * inv_k
        congruent(k * comb(2 * k, k) * u, p, p, 2, k=k)


def c25_exact(p: int) -> list[int]:
    """Left sides k C(2k,k) u_k computed with exact integers."""
    return [k * comb(2 * k, k) * shifted_u(k, p) for k in range(1, p)]


def c26(ctx: CheckContext, p: int) -> None:
    lhs = _g_over_k(ctx, p, 2)
    rhs = ResiduePoly(p, 2)
    for k in range((p + 1) // 2, p):
        rhs.add_term(k, Fraction(p, k * k))
    for k in range(1, p):
        rhs.add(ctx.store.poly(FP, k), -p * (-1) ** k * harmonic(k, 1) / k)
    poly_congruent(lhs, rhs, ctx)


def c27(ctx: CheckContext, p: int) -> None:
    lhs = sum(Fraction((-1) ** k * comb(2 * k, k), k * k) for k in range(1, p))
    congruent(lhs, 0, p, 1)


def c28(ctx: CheckContext, p: int) -> None:
    lhs = sum(Fraction((-1) ** k * comb(2 * k, k), k * k) for k in range(1, (p - 1) // 2 + 1))
    congruent(lhs, Fraction(56, 15) * p * bernoulli(p - 3), p, 2)


def c29(ctx: CheckContext, p: int) -> None:
    if ctx.wants("a"):
        lhs = sum(Fraction(comb(2 * k, k), k * 4**k) for k in range(1, p))
        congruent(lhs, 2 * fq(2, p), p, 1, part="a")
    if ctx.wants("b"):
        lhs = sum(Fraction(comb(2 * k, k), k) for k in range(1, p))
        congruent(lhs, 0, p, 2, part="b")


def c30(ctx: CheckContext, p: int) -> None:
    f = ctx.store.values(F, p)
    if ctx.wants("a"):
        congruent(sum(Fraction((-1) ** k * f[k], k * k) for k in range(1, p)), 0, p, 1, part="a")
    if ctx.wants("b"):
        congruent(sum(Fraction((-1) ** k * f[k], k) for k in range(1, p)), 0, p, 2, part="b")


BODIES = {
    "C01": c01, "C02": c02, "C03": c03, "C04": c04, "C05": c05, "C06": c06,
    "C07": c07, "C08": c08, "C09": c09, "C10": c10, "C11": c11, "C12": c12,
    "C13": c13, "C14": c14, "C15": c15, "C16": c16, "C17": c17, "C18": c18,
    "C19": c19, "C20": c20, "C21": c21, "C22": c22, "C23": c23, "C24": c24,
    "C25": c25, "C26": c26, "C27": c27, "C28": c28, "C29": c29, "C30": c30,
}
