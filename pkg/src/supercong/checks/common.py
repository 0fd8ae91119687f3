"""Context and comparison helpers shared by every check body."""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable

from ..exact import Poly, Rational
from ..modular import ModNum, rat_mod, ratpoly_mod
from ..sequences import SequenceStore
from .result import Mismatch

DEFAULT_POINTS = (-3, -1, 0, 1, 2)
I05_SEED = 20150917


class XMode(str, Enum):
    COEFFICIENT = "coefficient"
    EVAL = "eval"


@dataclass
class CheckContext:
    """Everything a check body may read besides its range parameters."""

    store: SequenceStore = field(default_factory=SequenceStore)
    xmode: XMode | None = None
    points: tuple[int, ...] = DEFAULT_POINTS
    seed: int = I05_SEED
    q_max: int = 10
    r_max: int = 5
    parts: frozenset[str] | None = None

    def wants(self, part: str) -> bool:
        return self.parts is None or part in self.parts


# prime admission thresholds, keyed by the wording used in the catalog
THRESHOLDS = {
    "any p": 2,
    "odd p": 3,
    "p>3": 5,
    "p>5": 7,
}


def residue(value: Rational | ModNum, p: int, e: int) -> int:
    m = p**e
    if isinstance(value, ModNum):
        if value.modulus != m:
            raise ValueError(f"residue taken mod {value.modulus}, expected {m}")
        return value.value
    return rat_mod(value, m, p).value


def congruent(lhs, rhs, p: int, e: int, **where) -> None:
    """Raise Mismatch unless lhs == rhs in Z/p^e (rationals read p-adically)."""
    a = residue(lhs, p, e)
    b = residue(rhs, p, e)
    if a != b:
        raise Mismatch(p=p, modulus=p**e, **where, lhs=a, rhs=b)


def divisible(value: int, d: int, **where) -> int:
    """Exact quotient value // d, or Mismatch with the remainder."""
    q, r = divmod(value, d)
    if r:
        raise Mismatch(**where, value=value, divisor=d, remainder=r)
    return q


class ResiduePoly:
    """Accumulator for a polynomial side reduced mod p^e as terms arrive.

    Integer coefficients are summed exactly and reduced at the end; rational
    factors are mapped into Z/p^e before multiplying in.
    """

    def __init__(self, p: int, e: int):
        self.p, self.e, self.m = p, e, p**e
        self.acc: list[int] = []

    def add(self, poly: Poly | Iterable[Rational], factor: Rational = 1, shift: int = 0) -> None:
        w = factor if isinstance(factor, int) else rat_mod(factor, self.m, self.p).value
        coeffs = poly.coeffs if isinstance(poly, Poly) else tuple(poly)
        if any(isinstance(c, Fraction) for c in coeffs):
            coeffs = ratpoly_mod(Poly(coeffs), self.m).coeffs
        need = len(coeffs) + shift
        if len(self.acc) < need:
            self.acc.extend([0] * (need - len(self.acc)))
        for j, c in enumerate(coeffs):
            if c:
                self.acc[j + shift] += c * w

    def add_term(self, k: int, coeff: Rational) -> None:
        """Add coeff * x^k."""
        self.add((coeff,), shift=k)

    def poly(self) -> Poly:
        return Poly(c % self.m for c in self.acc)


def poly_congruent(lhs: ResiduePoly, rhs: ResiduePoly, ctx: CheckContext, **where) -> None:
    """Compare two polynomial sides mod p^e per the context's XMode."""
    p, e, m = lhs.p, lhs.e, lhs.m
    a, b = lhs.poly(), rhs.poly()
    if (ctx.xmode or XMode.COEFFICIENT) is XMode.COEFFICIENT:
        for j in range(max(len(a), len(b))):
            if a[j] != b[j]:
                raise Mismatch(p=p, modulus=m, **where, coefficient=j, lhs=a[j], rhs=b[j])
        return
    for x in ctx.points:
        va = sum(c * pow(x, j, m) for j, c in enumerate(a.coeffs)) % m
        vb = sum(c * pow(x, j, m) for j, c in enumerate(b.coeffs)) % m
        if va != vb:
            raise Mismatch(p=p, modulus=m, **where, x=x, lhs=va, rhs=vb)
