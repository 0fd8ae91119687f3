"""Conjecture explorations.  A clean run means no counterexample in range."""
from __future__ import annotations

from fractions import Fraction
from typing import Any

from ..exact import Poly
from ..modular import bernoulli, crt, legendre, nu3, rat_mod, rational_reconstruction
from ..sequences import SeqId, partial_weighted_sum
from .common import CheckContext, congruent, divisible
from .congruences import KNOWN_C, fq
from .result import Mismatch

F, G, A = SeqId.FRANEL, SeqId.G, SeqId.APERY
S = SeqId.S_GNEG1

# denominator bound used when lifting the c_r residues to rationals
C_R_MAX_DEN = 3**6

Table = list[dict[str, Any]]


def x01(ctx: CheckContext, n_max: int, primes: list[int]) -> None:
    for n in range(2, n_max + 1):
        total = partial_weighted_sum("9k^2+5k", F, n, sign=-1, store=ctx.store)
        divisible(total, (n - 1) * n * n, n=n, part="(n-1)n^2")
    for p in primes:
        if p == 2:
            continue
        total = partial_weighted_sum("9k^2+5k", F, p, sign=-1, store=ctx.store)
        congruent(total, 3 * p * p * (p - 1) - 16 * p**3 * fq(2, p), p, 4, part="mod p^4")


def x02(ctx: CheckContext, n_max: int, primes: list[int]) -> None:
    total = Poly()
    for n in range(1, n_max + 1):
        k = n - 1
        total = total + ctx.store.poly(SeqId.G_POLY, k) * (4 * k + 3)
        try:
            total.exact_div(n)
        except ArithmeticError as exc:
            raise Mismatch(n=n, part="Z[x]", reason=str(exc)) from None
        t = partial_weighted_sum("8k^2+12k+5", S, n, store=ctx.store)
        q = divisible(t, n * n, n=n, part="odd integer")
        if q % 2 == 0:
            raise Mismatch(n=n, part="odd integer", value=q, reason="quotient is even")
    for p in primes:
        t = partial_weighted_sum("8k^2+12k+5", S, p, store=ctx.store)
        congruent(t, 3 * p * p, p, 3, part="mod p^3")


def x03(ctx: CheckContext, n_max: int, primes: list[int]) -> Table:
    table: Table = []
    s1 = s3 = 0
    for n in range(1, n_max + 1):
        k = n - 1
        a = (-1) ** k * ctx.store.value(A, k)
        s1 += (2 * k + 1) * a
        s3 += (2 * k + 1) ** 3 * a
        v1, v3, target = nu3(s1), nu3(s3), 3 * nu3(n)
        row = {"n": n, "nu3_sum1": v1, "3nu3_n": target, "nu3_sum3": v3}
        if n % 3 == 0:
            row["refined"] = target + 2
        table.append(row)
        if v1 != target:
            raise Mismatch(n=n, part="equality", lhs=v1, rhs=target, table=table)
        if not target <= v3:
            raise Mismatch(n=n, part="inequality", lhs=target, rhs=v3, table=table)
        if n % 3 == 0 and v3 != target + 2:
            raise Mismatch(n=n, part="multiple of 3", lhs=v3, rhs=target + 2, table=table)
    return table


def x04(ctx: CheckContext, n_max: int, primes: list[int]) -> None:
    for n in range(1, n_max + 1):
        w = partial_weighted_sum("6k+5", SeqId.FRANEL_NEG8, n, sign=-1, store=ctx.store)
        q = divisible(w, n, n=n, part="odd integer")
        if q % 2 == 0:
            raise Mismatch(n=n, part="odd integer", value=q, reason="quotient is even")
    for p in primes:
        if p <= 3:
            continue
        alt = sum((-1) ** k * ctx.store.value(SeqId.FRANEL_NEG8, k) for k in range(p))
        congruent(alt, legendre(p, 3), p, 2, part="F mod p^2")
        gsum = sum(ctx.store.value(SeqId.CATALAN_6K1, k) for k in range(1, p))
        congruent(gsum, Fraction(-4, 3) * p**3 * bernoulli(p - 3), p, 4, part="G mod p^4")


def x05(ctx: CheckContext, n_max: int, primes: list[int]) -> None:
    for p in primes:
        if p <= 3:
            continue
        g = ctx.store.values(G, p)
        lhs = sum(Fraction(g[k - 1], k) for k in range(1, p))
        congruent(lhs, -legendre(p, 3) * fq(9, p), p, 2, part="g_{k-1}/k")
        lhs = sum(Fraction(g[k], 9**k) for k in range(p))
        congruent(lhs, legendre(p, 3), p, 2, part="g_k/9^k")


def c_r_residue(ctx: CheckContext, p: int, r: int) -> int | None:
    """Residue of c_r mod p^2 from one prime, or None if p does not divide
    the sum (then no p-adic integer c_r can exist)."""
    total = sum((2 * k + 1) ** (2 * r + 1) * (-1) ** k * ctx.store.value(A, k) for k in range(p))
    q, rem = divmod(total, p)
    if rem:
        return None
    return q * legendre(p, 3) % (p * p)


def x06(ctx: CheckContext, n_max: int, primes: list[int]) -> Table:
    admitted = [p for p in primes if p > 3]
    table: Table = []
    failure = None
    for r in range(ctx.r_max + 1):
        residues = {p: c_r_residue(ctx, p, r) for p in admitted}
        expected = KNOWN_C[r] if r < len(KNOWN_C) else None
        matches = None
        if expected is not None:
            matches = {p: res == rat_mod(expected, p * p, p).value for p, res in residues.items()}
            bad = [p for p, ok in matches.items() if not ok]
            if bad and failure is None:
                p = bad[0]
                failure = dict(r=r, p=p, modulus=p * p, lhs=residues[p],
                               rhs=rat_mod(expected, p * p, p).value)
        usable = [p for p in admitted if residues[p] is not None]
        candidate = stable = None
        if usable:
            x, m = crt([residues[p] for p in usable], [p * p for p in usable])
            candidate = rational_reconstruction(x, m, C_R_MAX_DEN)
            if len(usable) > 1:
                y, m2 = crt([residues[p] for p in usable[:-1]], [p * p for p in usable[:-1]])
                stable = candidate is not None and candidate == rational_reconstruction(y, m2, C_R_MAX_DEN)
        table.append({
            "r": r,
            "expected": expected,
            "candidate": candidate,
            "stable": stable,
            "primes": usable,
            "residues_mod_p2": {str(p): residues[p] for p in admitted},
            "matches_expected": None if matches is None else all(matches.values()),
        })
    if failure:
        raise Mismatch(**failure, table=table)
    return table


def x07(ctx: CheckContext, n_max: int, primes: list[int]) -> None:
    for p in primes:
        if p <= 3:
            continue
        alt = sum((-1) ** k * ctx.store.value(F, k) for k in range(p))
        congruent(alt, legendre(p, 3), p, 2, part="Franel")
        hsum = sum(ctx.store.value(SeqId.H_CATALAN, k) for k in range(1, p))
        congruent(hsum, 0, p, 2, part="h_k")


BODIES = {"X01": x01, "X02": x02, "X03": x03, "X04": x04, "X05": x05, "X06": x06, "X07": x07}
