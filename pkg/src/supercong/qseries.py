"""Gaussian binomials over Laurent polynomials in q, and the q-analogues
A_n(x;q), g_n(x;q).
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

from .exact import Poly

__all__ = [
    "QLaurent",
    "QXPoly",
    "q_int",
    "q_binom",
    "q_binom_product",
    "g_q",
    "a_q",
    "expansion_rhs",
    "q_monomial",
]


class QLaurent:
    """sum_i coeffs[i] * q^(low + i), trimmed of zeros at both ends."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), low: int = 0):
        run = list(coeffs)
        start = 0
        while start < len(run) and run[start] == 0:
            start += 1
        end = len(run)
        while end > start and run[end - 1] == 0:
            end -= 1
        self.coeffs: tuple[int, ...] = tuple(run[start:end])
        self.low = low + start if self.coeffs else 0

    @property
    def high(self) -> int | None:
        return self.low + len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = QLaurent([other])
        if not isinstance(other, QLaurent):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def __repr__(self) -> str:
        return f"QLaurent({list(self.coeffs)!r}, low={self.low})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.low + i
            mono = "" if e == 0 else ("q" if e == 1 else f"q^{e}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}*{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __add__(self, other) -> "QLaurent":
        other = _qlift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        low = min(self.low, other.low)
        high = max(self.high, other.high)
        out = [0] * (high - low + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - low + i] += c
        for i, c in enumerate(other.coeffs):
            out[other.low - low + i] += c
        return QLaurent(out, low)

    __radd__ = __add__

    def __neg__(self) -> "QLaurent":
        return QLaurent([-c for c in self.coeffs], self.low)

    def __sub__(self, other) -> "QLaurent":
        return self + (-_qlift(other))

    def __rsub__(self, other) -> "QLaurent":
        return _qlift(other) + (-self)

    def __mul__(self, other) -> "QLaurent":
        if isinstance(other, int):
            return QLaurent([c * other for c in self.coeffs], self.low)
        if not isinstance(other, QLaurent):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QLaurent()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return QLaurent(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "QLaurent":
        out = QLaurent([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "QLaurent":
        """Multiply by q^k."""
        return QLaurent(self.coeffs, self.low + k)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def exact_div(self, d: "QLaurent") -> "QLaurent":
        """Quotient of exact division; ArithmeticError if a remainder is left."""
        if d.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return QLaurent()
        lead = d.coeffs[-1]
        rem = list(self.coeffs)
        dl = len(d.coeffs)
        if len(rem) < dl:
            raise ArithmeticError("inexact Laurent division")
        quot = [0] * (len(rem) - dl + 1)
        for i in range(len(quot) - 1, -1, -1):
            c, r = divmod(rem[i + dl - 1], lead)
            if r:
                raise ArithmeticError("inexact Laurent division")
            quot[i] = c
            if c:
                for j, b in enumerate(d.coeffs):
                    rem[i + j] -= c * b
        if any(rem):
            raise ArithmeticError("inexact Laurent division")
        return QLaurent(quot, self.low - d.low)


def _qlift(v) -> QLaurent:
    return v if isinstance(v, QLaurent) else QLaurent([v])


def q_monomial(k: int, c: int = 1) -> QLaurent:
    return QLaurent([c], k)


def q_int(n: int) -> QLaurent:
    """[n]_q = (1 - q^n)/(1 - q); for n < 0 this is -q^n (1 + ... + q^(-n-1))."""
    if n >= 0:
        return QLaurent([1] * n)
    return QLaurent([-1] * (-n), n)


@lru_cache(maxsize=None)
def q_binom(n: int, k: int) -> QLaurent:
    """Gaussian binomial [n choose k]_q for any integer n and k >= 0."""
    if k < 0:
        raise ValueError("q_binom: k must be >= 0")
    if k == 0:
        return QLaurent([1])
    if n < 0:
        # [-m-1 choose k] = (-1)^k q^(-km - k(k+1)/2) [m+k choose k]
        m = -n - 1
        sign = -1 if k % 2 else 1
        return (q_binom(m + k, k) * sign).shift(-k * m - k * (k + 1) // 2)
    if k > n:
        return QLaurent()
    if k == n:
        return QLaurent([1])
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    return q_binom(n - 1, k - 1) + q_binom(n - 1, k).shift(k)


def q_binom_product(n: int, k: int) -> QLaurent:
    """prod_{j=1..k} [n-j+1]_q / [j]_q with exact division after each factor."""
    if k < 0:
        raise ValueError("q_binom_product: k must be >= 0")
    acc = QLaurent([1])
    for j in range(1, k + 1):
        acc = (acc * q_int(n - j + 1)).exact_div(q_int(j))
    return acc


class QXPoly:
    """Polynomial in x with QLaurent coefficients (lowest power of x first)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[QLaurent] = ()):
        run = [_qlift(c) for c in coeffs]
        while run and run[-1].is_zero():
            run.pop()
        self.coeffs: tuple[QLaurent, ...] = tuple(run)

    def __getitem__(self, k: int) -> QLaurent:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else QLaurent()

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QXPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "QXPoly") -> "QXPoly":
        n = max(len(self), len(other))
        return QXPoly(self[k] + other[k] for k in range(n))

    def scale(self, c: QLaurent | int) -> "QXPoly":
        return QXPoly(a * c for a in self.coeffs)

    def at_q_one(self) -> Poly:
        return Poly(c.at_one() for c in self.coeffs)

    def __repr__(self) -> str:
        return f"QXPoly({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            xs = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            parts.append(f"({c}){'*' + xs if xs else ''}")
        return " + ".join(parts)


def _family(n: int, upper: Sequence[int], power: int) -> QXPoly:
    terms = []
    for k in range(n + 1):
        c = q_binom(n, k) ** 2 * q_binom(upper[k], k) ** power
        terms.append(c.shift(2 * n * (n - k)))
    return QXPoly(terms)


@lru_cache(maxsize=None)
def g_q(n: int) -> QXPoly:
    """g_n(x;q) = sum_k q^(2n(n-k)) [n,k]^2 [2k,k] x^k."""
    return _family(n, [2 * k for k in range(n + 1)], 1)


@lru_cache(maxsize=None)
def a_q(n: int) -> QXPoly:
    """A_n(x;q) = sum_k q^(2n(n-k)) [n,k]^2 [n+k,k]^2 x^k."""
    return _family(n, [n + k for k in range(n + 1)], 2)


def expansion_rhs(n: int) -> QXPoly:
    """sum_k (-1)^(n-k) q^((n-k)(5n+3k+1)/2) [n,k] [n+k,k] g_k(x;q)."""
    total = QXPoly()
    for k in range(n + 1):
        e2 = (n - k) * (5 * n + 3 * k + 1)
        c = (q_binom(n, k) * q_binom(n + k, k)).shift(e2 // 2)
        if (n - k) % 2:
            c = -c
        total = total + g_q(k).scale(c)
    return total


def expansion_coefficient(n: int, j: int) -> tuple[QLaurent, QLaurent]:
    """Both sides of the j-th coefficient identity behind the expansion:
    sum_{k=j}^{n} (-1)^(n-k) q^(C(n-k+1,2) + 2j(n-k)) [n+k,k][k,j][n-j,k-j]
    against [n+j,j][n+j,2j]."""
    lhs = QLaurent()
    for k in range(j, n + 1):
        e = (n - k + 1) * (n - k) // 2 + 2 * j * (n - k)
        term = (q_binom(n + k, k) * q_binom(k, j) * q_binom(n - j, k - j)).shift(e)
        lhs = lhs + (-term if (n - k) % 2 else term)
    return lhs, q_binom(n + j, j) * q_binom(n + j, 2 * j)


def verify_expansion(n: int):
    """Exact check of A_n(x;q) against the g_k(x;q) expansion, plus the
    per-coefficient identity for every 0 <= j <= n."""
    import time

    from .checks.result import CheckResult, Status

    t0 = time.perf_counter()
    witness = None
    lhs, rhs = a_q(n), expansion_rhs(n)
    if lhs != rhs:
        witness = {"n": n, "part": "expansion", "lhs": str(lhs), "rhs": str(rhs)}
    else:
        for j in range(n + 1):
            left, right = expansion_coefficient(n, j)
            if left != right:
                witness = {"n": n, "j": j, "part": "coefficient", "lhs": str(left), "rhs": str(right)}
                break
    elapsed = round((time.perf_counter() - t0) * 1000, 3)
    status = Status.FAIL if witness else Status.PASS
    return CheckResult("Q01", {"n": n}, status, witness=witness, elapsed_ms=elapsed)
