"""Residues modulo prime powers and the number-theoretic constants that
appear on the right-hand sides of the congruences.

A rational ``a`` is read modulo ``p^e`` as ``num * den^{-1}``; this is only
defined when ``p`` does not divide the reduced denominator, and
:class:`NonUnitDenominator` is raised otherwise.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from functools import total_ordering
from math import comb, isqrt

from .exact import Poly, Rational

__all__ = [
    "ModNum",
    "NonUnitDenominator",
    "INFINITY",
    "is_prime",
    "prime_power",
    "primes_in",
    "legendre",
    "fermat_quotient",
    "bernoulli",
    "euler_number",
    "harmonic",
    "rat_mod",
    "ratpoly_mod",
    "nu",
    "nu3",
    "crt",
    "rational_reconstruction",
]


class NonUnitDenominator(ArithmeticError):
    """A rational's denominator shares a factor with the modulus."""

    def __init__(self, value: Fraction, modulus: int, power: int | None = None):
        self.value = value
        self.modulus = modulus
        self.power = power
        where = f" (coefficient of x^{power})" if power is not None else ""
        super().__init__(f"denominator of {value} is not a unit mod {modulus}{where}")


# ---------------------------------------------------------------- primes


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes in the closed interval [lo, hi] by the sieve of Eratosthenes."""
    if lo < 2 or hi < lo:
        raise ValueError(f"primes_in needs 2 <= lo <= hi, got [{lo}, {hi}]")
    sieve = bytearray([1]) * (hi + 1)
    sieve[0] = sieve[1] = 0
    for d in range(2, isqrt(hi) + 1):
        if sieve[d]:
            sieve[d * d :: d] = bytes(len(range(d * d, hi + 1, d)))
    return [n for n in range(lo, hi + 1) if sieve[n]]


def prime_power(m: int) -> tuple[int, int]:
    """Return (p, e) with m == p**e, or raise ValueError."""
    if m < 2:
        raise ValueError(f"{m} is not a prime power")
    p = next(d for d in range(2, m + 1) if m % d == 0)
    e, r = 0, m
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{m} is not a prime power")
    return p, e


# ---------------------------------------------------------------- residues


class ModNum:
    """Residue modulo p**e.  Arithmetic between different moduli is refused."""

    __slots__ = ("value", "p", "e", "modulus")

    def __init__(self, value: int, p: int, e: int = 1):
        if e < 1:
            raise ValueError("exponent must be >= 1")
        self.p = p
        self.e = e
        self.modulus = p**e
        self.value = value % self.modulus

    def _coerce(self, other) -> int:
        if isinstance(other, ModNum):
            if other.modulus != self.modulus:
                raise ValueError(
                    f"mixed moduli: {self.p}^{self.e} vs {other.p}^{other.e}"
                )
            return other.value
        if isinstance(other, (int, Fraction)):
            return rat_mod(other, self.modulus, self.p).value
        return NotImplemented

    def _new(self, v: int) -> "ModNum":
        return ModNum(v, self.p, self.e)

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value - o)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(o - self.value)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else self._new(self.value * o)

    __rmul__ = __mul__

    def __neg__(self) -> "ModNum":
        return self._new(-self.value)

    def __pow__(self, k: int) -> "ModNum":
        return self._new(pow(self.value, k, self.modulus))

    def inverse(self) -> "ModNum":
        if self.value % self.p == 0:
            raise NonUnitDenominator(Fraction(1, self.value or self.modulus), self.modulus)
        return self._new(pow(self.value, -1, self.modulus))

    def __eq__(self, other) -> bool:
        if isinstance(other, ModNum):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, Fraction)):
            try:
                return self.value == self._coerce(other)
            except NonUnitDenominator:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.modulus))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"ModNum({self.value}, {self.p}^{self.e})"

    def __str__(self) -> str:
        return f"{self.value} mod {self.modulus}"


def rat_mod(a: Rational, m: int, p: int | None = None) -> ModNum:
    """Image of the rational ``a`` in Z/m, where ``m`` is a prime power."""
    if p is None:
        p, e = prime_power(m)
    else:
        e = 0
        r = m
        while r > 1:
            r //= p
            e += 1
    if isinstance(a, int):
        return ModNum(a, p, e)
    num, den = a.numerator, a.denominator
    if den % p == 0:
        raise NonUnitDenominator(a, m)
    return ModNum(num * pow(den, -1, m), p, e)


def ratpoly_mod(poly: Poly, m: int) -> Poly:
    """Coefficient-wise ``rat_mod``; residues are taken in [0, m)."""
    p, _ = prime_power(m)
    out = []
    for k, c in enumerate(poly.coeffs):
        try:
            out.append(rat_mod(c, m, p).value)
        except NonUnitDenominator as exc:
            raise NonUnitDenominator(exc.value, m, power=k) from None
    return Poly(out)


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) by Euler's criterion."""
    if p == 2 or not is_prime(p):
        raise ValueError(f"legendre: {p} is not an odd prime")
    t = pow(a, (p - 1) // 2, p)
    return -1 if t == p - 1 else t


def fermat_quotient(a: int, p: int, e: int = 1) -> ModNum:
    """(a^(p-1) - 1)/p reduced mod p^e."""
    if a % p == 0:
        raise ValueError(f"fermat_quotient: {p} divides {a}")
    # a^(p-1) mod p^(e+1) determines the quotient mod p^e
    top = p ** (e + 1)
    return ModNum((pow(a, p - 1, top) - 1) // p, p, e)


# ---------------------------------------------------------------- constants

_lock = threading.Lock()
_bernoulli: list[Fraction] = [Fraction(1)]
_euler_even: list[int] = [1]
_harmonic: dict[int, list[Fraction]] = {1: [Fraction(0)], 2: [Fraction(0)]}


def bernoulli(n: int) -> Fraction:
    """B_n from sum_{j=0}^{n} C(n+1, j) B_j = 0 (so B_1 = -1/2)."""
    if n < 0:
        raise ValueError("bernoulli: index must be >= 0")
    if n >= 3 and n % 2:
        return Fraction(0)
    table = _bernoulli
    if n < len(table):
        return table[n]
    with _lock:
        table = list(_bernoulli)
        for m in range(len(table), n + 1):
            if m >= 3 and m % 2:
                table.append(Fraction(0))
                continue
            s = sum(comb(m + 1, j) * table[j] for j in range(m) if table[j])
            table.append(-s / (m + 1))
        _bernoulli[:] = table
    return table[n]


def euler_number(n: int) -> int:
    """E_n from E_0 = 1, E_odd = 0, sum_{k=0}^{m} C(2m, 2k) E_{2k} = 0."""
    if n < 0:
        raise ValueError("euler_number: index must be >= 0")
    if n % 2:
        return 0
    half = n // 2
    if half < len(_euler_even):
        return _euler_even[half]
    with _lock:
        table = list(_euler_even)
        for m in range(len(table), half + 1):
            table.append(-sum(comb(2 * m, 2 * k) * table[k] for k in range(m)))
        _euler_even[:] = table
    return table[half]


def harmonic(n: int, order: int = 1) -> Fraction:
    """H_n^{(order)} = sum_{0<k<=n} 1/k^order for order 1 or 2."""
    if n < 0:
        raise ValueError("harmonic: index must be >= 0")
    if order not in (1, 2):
        raise ValueError("harmonic: order must be 1 or 2")
    table = _harmonic[order]
    if n < len(table):
        return table[n]
    with _lock:
        table = list(_harmonic[order])
        for k in range(len(table), n + 1):
            table.append(table[-1] + Fraction(1, k**order))
        _harmonic[order] = table
    return table[n]


# ---------------------------------------------------------------- valuations


@total_ordering
class _Infinity:
    """+infinity for valuations; compares above every int."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return False

    def __gt__(self, other) -> bool:
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self) -> int:
        return hash("+inf")

    def __repr__(self) -> str:
        return "+inf"


INFINITY = _Infinity()


def nu(n: int, p: int):
    """p-adic valuation of an integer; INFINITY for 0."""
    if n == 0:
        return INFINITY
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def nu3(n: int):
    return nu(n, 3)


# ---------------------------------------------------------------- lifting


def crt(residues: list[int], moduli: list[int]) -> tuple[int, int]:
    """Combine x = r_i mod m_i for pairwise coprime m_i into (x, prod m_i)."""
    x, m = 0, 1
    for r, mi in zip(residues, moduli):
        t = ((r - x) * pow(m, -1, mi)) % mi
        x += m * t
        m *= mi
    return x % m, m


def rational_reconstruction(r: int, m: int, max_den: int) -> Fraction | None:
    """The unique a/b with a = b*r mod m, 0 < b <= max_den and
    |a| <= m // (2*max_den), or None when no such fraction exists."""
    max_num = m // (2 * max_den)
    r0, r1 = m, r % m
    s0, s1 = 0, 1
    while r1 > max_num:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > max_den:
        return None
    frac = Fraction(r1, s1)
    if frac.denominator > max_den or (frac.numerator - frac.denominator * r) % m:
        return None
    return frac
