"""Integer sequences and polynomial families built from binomial sums.

Every value is obtained by direct summation of its defining formula.  The
Franel numbers and s_n = g_n(-1) additionally have a recurrence route so the
two computations can be compared.
"""
from __future__ import annotations

import threading
from enum import Enum
from math import comb
from typing import Mapping, Sequence

from .exact import Poly, Rational, poly_eval

__all__ = [
    "SeqId",
    "IntegrityError",
    "SequenceStore",
    "WEIGHTS",
    "default_store",
    "seq_value",
    "seq_poly",
    "seq_by_recurrence",
    "partial_weighted_sum",
]


class IntegrityError(ArithmeticError):
    """An exactness guarantee that a known theorem provides was violated."""


class SeqId(str, Enum):
    FRANEL = "franel"
    FRANEL_POLY = "franel_poly"
    G = "g"
    G_POLY = "g_poly"
    APERY = "apery"
    APERY_POLY = "apery_poly"
    CATALAN = "catalan"
    FRANEL_NEG8 = "franel_neg8"
    CATALAN_6K1 = "catalan_6k1"
    H_CATALAN = "h_catalan"
    A_NORMALIZED = "a_normalized"
    S_GNEG1 = "s_gneg1"


POLY_FAMILIES = (SeqId.FRANEL_POLY, SeqId.G_POLY, SeqId.APERY_POLY)


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


def _g_poly(n: int) -> Poly:
    return Poly(comb(n, k) ** 2 * comb(2 * k, k) for k in range(n + 1))


def _franel_poly(n: int) -> Poly:
    # binom(2k, n) vanishes for 2k < n
    return Poly(comb(n, k) ** 2 * comb(2 * k, n) for k in range(n + 1))


def _apery_poly(n: int) -> Poly:
    return Poly((comb(n, k) * comb(n + k, k)) ** 2 for k in range(n + 1))


_POLY_BUILDERS = {
    SeqId.G_POLY: _g_poly,
    SeqId.FRANEL_POLY: _franel_poly,
    SeqId.APERY_POLY: _apery_poly,
}


def _direct(sid: SeqId, n: int, store: "SequenceStore") -> int:
    if sid is SeqId.FRANEL:
        return sum(comb(n, k) ** 3 for k in range(n + 1))
    if sid is SeqId.G:
        return sum(comb(n, k) ** 2 * comb(2 * k, k) for k in range(n + 1))
    if sid is SeqId.APERY:
        return sum((comb(n, k) * comb(n + k, k)) ** 2 for k in range(n + 1))
    if sid is SeqId.CATALAN:
        return catalan(n)
    if sid is SeqId.FRANEL_NEG8:
        return sum(comb(n, k) ** 3 * (-8) ** k for k in range(n + 1))
    if sid is SeqId.CATALAN_6K1:
        return sum(comb(n, k) ** 2 * (6 * k + 1) * catalan(k) for k in range(n + 1))
    if sid is SeqId.H_CATALAN:
        return sum(comb(n, j) ** 2 * catalan(j) for j in range(n + 1))
    if sid is SeqId.S_GNEG1:
        return sum(comb(n, k) ** 2 * comb(2 * k, k) * (-1) ** k for k in range(n + 1))
    if sid is SeqId.A_NORMALIZED:
        if n == 0:
            return 0
        total = sum((3 * k + 2) * (-1) ** k * store.value(SeqId.FRANEL, k) for k in range(n))
        q, r = divmod(total, n * n)
        if r:
            raise IntegrityError(f"a_{n}: {n}^2 does not divide {total}")
        return q
    raise ValueError(f"{sid.value} is a polynomial family; use poly()")


class SequenceStore:
    """Memoized access to every sequence, keyed by (SeqId, n).

    ``perturb`` maps (SeqId, n) to an integer added to the stored value.  It
    exists so tests can plant a known defect and watch the checks catch it.
    """

    def __init__(self, perturb: Mapping[tuple[SeqId | str, int], int] | None = None):
        self._values: dict[tuple[SeqId, int], int] = {}
        self._polys: dict[tuple[SeqId, int], Poly] = {}
        self._evals: dict[tuple[SeqId, int, Rational], Rational] = {}
        self._lock = threading.Lock()
        self.perturb = {(SeqId(s), n): d for (s, n), d in (perturb or {}).items()}

    def value(self, sid: SeqId | str, n: int) -> int:
        sid = SeqId(sid)
        if n < 0:
            raise ValueError(f"{sid.value}: index must be >= 0")
        key = (sid, n)
        hit = self._values.get(key)
        if hit is not None:
            return hit
        if sid in POLY_FAMILIES:
            raise ValueError(f"{sid.value} is a polynomial family; use poly()")
        v = _direct(sid, n, self) + self.perturb.get(key, 0)
        with self._lock:
            return self._values.setdefault(key, v)

    def values(self, sid: SeqId | str, count: int) -> list[int]:
        """The prefix [v_0, ..., v_{count-1}]."""
        return [self.value(sid, n) for n in range(count)]

    def poly(self, sid: SeqId | str, n: int) -> Poly:
        sid = SeqId(sid)
        if sid not in POLY_FAMILIES:
            raise ValueError(f"{sid.value} is not a polynomial family")
        if n < 0:
            raise ValueError(f"{sid.value}: index must be >= 0")
        key = (sid, n)
        hit = self._polys.get(key)
        if hit is None:
            built = _POLY_BUILDERS[sid](n)
            with self._lock:
                hit = self._polys.setdefault(key, built)
        return hit

    def at(self, sid: SeqId | str, n: int, x: Rational) -> Rational:
        """Polynomial family member evaluated at x (cached)."""
        sid = SeqId(sid)
        key = (sid, n, x)
        hit = self._evals.get(key)
        if hit is None:
            v = poly_eval(self.poly(sid, n), x)
            with self._lock:
                hit = self._evals.setdefault(key, v)
        return hit

    def by_recurrence(self, sid: SeqId | str, n: int) -> int:
        sid = SeqId(sid)
        if sid is SeqId.FRANEL:
            return _franel_recurrence(n, self)
        if sid is SeqId.S_GNEG1:
            return _s_recurrence(n, self)
        raise ValueError(f"no recurrence route for {sid.value}")


def _exact_quotient(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise IntegrityError(f"{what}: {den} does not divide {num}")
    return q


def _franel_recurrence(n: int, store: SequenceStore) -> int:
    # (m+1)^2 f_{m+1} = (7m(m+1)+2) f_m + 8m^2 f_{m-1}
    if n < 0:
        raise ValueError("index must be >= 0")
    seed = [store.value(SeqId.FRANEL, 0), store.value(SeqId.FRANEL, 1)]
    if n < 2:
        return seed[n]
    prev, cur = seed
    for m in range(1, n):
        nxt = _exact_quotient(
            (7 * m * (m + 1) + 2) * cur + 8 * m * m * prev, (m + 1) ** 2, f"f_{m + 1}"
        )
        prev, cur = cur, nxt
    return cur


def _s_recurrence(n: int, store: SequenceStore) -> int:
    if n < 0:
        raise ValueError("index must be >= 0")
    s = [store.value(SeqId.S_GNEG1, i) for i in range(3)]
    if n < 3:
        return s[n]
    for m in range(0, n - 2):
        rhs = -(
            (20 * m**3 + 125 * m**2 + 254 * m + 165) * s[2]
            + (76 * m**3 + 399 * m**2 + 678 * m + 375) * s[1]
            - 25 * (m + 1) ** 2 * (4 * m + 9) * s[0]
        )
        nxt = _exact_quotient(rhs, (m + 3) ** 2 * (4 * m + 5), f"s_{m + 3}")
        s = [s[1], s[2], nxt]
    return s[2]


# weight polynomials in k, lowest degree first
WEIGHTS: dict[str, tuple[int, ...]] = {
    "2k+1": (1, 2),
    "3k+1": (1, 3),
    "3k+2": (2, 3),
    "4k+3": (3, 4),
    "6k+5": (5, 6),
    "9k^2+5k": (0, 5, 9),
    "8k^2+12k+5": (5, 12, 8),
    "6k^3+9k^2+5k+1": (1, 5, 9, 6),
    "(2k+1)^3": (1, 6, 12, 8),
}


def partial_weighted_sum(
    weight: str | Sequence[int],
    sid: SeqId | str,
    n: int,
    sign: int = 1,
    ratio: int = 1,
    store: SequenceStore | None = None,
) -> int:
    """sum_{k=0}^{n-1} w(k) * sign^k * ratio^(n-1-k) * v_k.

    ``weight`` is a key of WEIGHTS or a coefficient run for w(k).
    """
    coeffs = WEIGHTS[weight] if isinstance(weight, str) else tuple(weight)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    store = store or default_store
    total = 0
    for k in range(n):
        w = poly_eval(coeffs, k)
        total += w * sign**k * ratio ** (n - 1 - k) * store.value(sid, k)
    return total


default_store = SequenceStore()


def seq_value(sid: SeqId | str, n: int) -> int:
    return default_store.value(sid, n)


def seq_poly(sid: SeqId | str, n: int) -> Poly:
    return default_store.poly(sid, n)


def seq_by_recurrence(sid: SeqId | str, n: int) -> int:
    return default_store.by_recurrence(sid, n)
