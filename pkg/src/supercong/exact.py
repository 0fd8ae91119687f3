"""Exact integers, rationals, generalized binomials and dense polynomials.

Python ``int`` is the arbitrary-precision integer and ``fractions.Fraction``
the always-reduced rational; this module adds what they lack: binomial
coefficients with negative upper index and a small univariate polynomial
type used for g_n(x), f_n(x), A_n(x) and their residue images.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

__all__ = [
    "Rational",
    "Poly",
    "binom",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "rat_add",
    "rat_mul",
    "rat_inv",
    "as_exact",
]

Rational = Union[int, Fraction]


def binom(n: int, k: int) -> int:
    """Generalized binomial coefficient prod_{j=1..k} (n-j+1)/j.

    ``n`` may be any integer; ``k`` must be nonnegative.
    """
    if k < 0:
        raise ValueError(f"binom: lower index must be >= 0, got {k}")
    if n >= 0:
        return comb(n, k)
    # running value after step j is binom(n, j), so each division is exact
    value = 1
    for j in range(1, k + 1):
        value = value * (n - j + 1) // j
    return value


def as_exact(value: Rational) -> Rational:
    """Collapse a Fraction with denominator 1 to int."""
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def rat_add(a: Rational, b: Rational) -> Fraction:
    return Fraction(a) + Fraction(b)


def rat_mul(a: Rational, b: Rational) -> Fraction:
    return Fraction(a) * Fraction(b)


def rat_inv(a: Rational) -> Fraction:
    if a == 0:
        raise ZeroDivisionError("rat_inv: zero has no inverse")
    return 1 / Fraction(a)


class Poly:
    """Dense univariate polynomial with exact coefficients.

    Coefficients are stored lowest degree first with trailing zeros trimmed,
    so the zero polynomial has an empty run and ``degree`` None.  The
    coefficient domain is whatever the entries are (int for IntPoly, Fraction
    for RatPoly); Fraction entries that happen to be integral are kept as int.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        run = [as_exact(c) for c in coeffs]
        while run and run[-1] == 0:
            run.pop()
        self.coeffs: tuple[Rational, ...] = tuple(run)

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "Poly":
        return cls([0] * k + [c])

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __getitem__(self, k: int) -> Rational:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = -c if c < 0 else c
            if k == 0:
                body = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)

    def __add__(self, other):
        return poly_add(self, _lift(other))

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        return poly_add(self, -_lift(other))

    def __rsub__(self, other):
        return poly_add(_lift(other), -self)

    def __mul__(self, other):
        if isinstance(other, Poly):
            return poly_mul(self, other)
        return poly_scale(self, other)

    __rmul__ = __mul__

    def __call__(self, x: Rational) -> Rational:
        return poly_eval(self, x)

    def exact_div(self, d: int) -> "Poly":
        """Divide every coefficient by the integer ``d``; raise if not exact."""
        out = []
        for k, c in enumerate(self.coeffs):
            q, r = divmod(c, d) if isinstance(c, int) else (None, 1)
            if r:
                raise ArithmeticError(f"coefficient of x^{k} not divisible by {d}")
            out.append(q)
        return Poly(out)


def _lift(value) -> Poly:
    return value if isinstance(value, Poly) else Poly([value])


def poly_add(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    return Poly(a[k] + b[k] for k in range(n))


def poly_scale(a: Poly, c: Rational) -> Poly:
    return Poly(c * x for x in a.coeffs)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if a.is_zero() or b.is_zero():
        return Poly()
    out: list[Rational] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return Poly(out)


def poly_eval(a: Poly | Sequence[Rational], x: Rational) -> Rational:
    """Horner evaluation at an exact point."""
    coeffs = a.coeffs if isinstance(a, Poly) else tuple(a)
    acc: Rational = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return as_exact(acc)
