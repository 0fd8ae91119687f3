"""Catalog of every verifiable statement and the runners that execute them."""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from typing import Any, Callable, Iterable

from ..modular import NonUnitDenominator, primes_in
from ..sequences import IntegrityError
from . import congruences, conjectures, identities, qchecks
from .common import THRESHOLDS, CheckContext, XMode
from .result import CheckResult, Mismatch, Skip, Status


@dataclass(frozen=True)
class Check:
    id: str
    kind: str  # identity | q | congruence | conjecture
    label: str
    summary: str
    threshold: str | None = None
    modulus: str | None = None
    xmode: bool = False
    parts: tuple[str, ...] = ()

    @property
    def body(self) -> Callable:
        table = {
            "identity": identities.BODIES,
            "q": qchecks.BODIES,
            "congruence": congruences.BODIES,
            "conjecture": conjectures.BODIES,
        }[self.kind]
        return table[self.id]

    def admits(self, p: int) -> bool:
        return p >= THRESHOLDS[self.threshold or "any p"]


def _i(id, label, summary):
    return Check(id, "identity", label, summary)


def _c(id, label, summary, threshold, modulus, xmode=False, parts=()):
    return Check(id, "congruence", label, summary, threshold, modulus, xmode, parts)


CATALOG: tuple[Check, ...] = (
    _i("I01", "Apery via Franel", "A_n = sum C(n,k) C(n+k,k) f_k"),
    _i("I02", "binomial transform", "sum C(n,k) f_k = g_n"),
    _i("I03", "Catalan sum", "(1/3n^2) sum (4k+3) g_k = sum C(n-1,k)^2 C_k"),
    _i("I04", "weight 3k+1, ratio 8", "(1/n^2) sum (3k+1) f_k 8^(n-1-k) closed form"),
    _i("I05", "inversion pair", "inversion pair with seeded random x_k"),
    _i("I06", "alternating inner sum", "sum (-1)^l (2l+1) C(l+k,2k)"),
    _i("I07", "binomial convolution", "convolution of binomials at integer points"),
    _i("I08", "polynomial transform", "g_n(x) = sum C(n,k) f_k(x) and its inverse"),
    _i("I09", "A_n(x) two ways", "A_n(x) via f_k(x) and via g_k(x)"),
    _i("I10", "weighted A_n(x) via g", "(1/n) sum (2k+1) A_k(x) via g_k(x)"),
    _i("I11", "alternating A_n(x) via f", "(1/n) sum (2k+1) (-1)^k A_k(x) via f_k(x)"),
    _i("I12", "cubic weight mod n^3", "sum (-1)^k (6k^3+9k^2+5k+1) A_k = 0 mod n^3"),
    _i("I13", "weight 3k+2 mod n^2", "sum C(n-1,k) C(n+k,k) (3k+2) f_k = 0 mod n^2"),
    _i("I14", "a_m integrality", "(1/m^2) sum (3k+2) (-1)^k f_k is an integer"),
    _i("I15", "Franel recurrence", "(n+1)^2 f_{n+1} = (7n(n+1)+2) f_n + 8n^2 f_{n-1}"),
    _i("I16", "s_n recurrence", "order-3 recurrence for s_n = g_n(-1)"),
    _i("I17", "u_n recurrence", "order-3 recurrence for both sides of I03"),
    _i("I18", "Z[x] integrality", "(1/n) sum (2k+1) A_k(x) in Z[x]"),
    _i("I19", "alternating Z[x] integrality", "(1/n) sum (2k+1) (-1)^k A_k(x) in Z[x]"),
    _i("I20", "cubic-weight inner sums", "inner sum, reduction to I13, a_k rewrite"),
    _i("I21", "odd-weight inner sum", "sum (2n+1) C(n+k,2k) = m(m-k)/(k+1) C(m+k,2k)"),
    _i("I22", "u_k recurrence", "recurrence and seed for u_k"),
    Check("Q01", "q", "q-expansion", "A_n(x;q) as a sum over g_k(x;q)"),
    Check("Q02", "q", "q-coefficient identity", "per-coefficient identity behind Q01"),
    Check("Q03", "q", "negative q-binomial", "[-m-1,k] = (-1)^k q^(-km-k(k+1)/2) [m+k,k]"),
    Check("Q04", "q", "q-Chu-Vandermonde", "instance used to derive Q02"),
    Check("Q05", "q", "q -> 1", "specializations to binomials and g_n(x), A_n(x)"),
    _c("C01", "Wolstenholme", "C(2p-1,p-1) = 1 mod p^3, H_{p-1}, H2_{p-1}", "p>3", "mod p^3/p^2/p", parts=("a", "b", "c")),
    _c("C02", "g(x) harmonic twist", "sum g_k(x)(1-p^2 H2_k) vs sum p/(2k+1)(1-2p^2 H2_k) x^k", "p>3", "mod p^4", xmode=True),
    _c("C03", "sum g_k from 1", "sum_{k>=1} g_k vs p^2 sum g_k H2_k + 7/6 p^3 B_{p-3}", "p>3", "mod p^4"),
    _c("C04", "sum g_k(-1)", "sum g_k(-1) vs (-1/p) + p^2(sum g_k(-1) H2_k - E_{p-3})", "p>3", "mod p^3"),
    _c("C05", "sum g_k(-3)", "sum g_k(-3) = (p/3)", "p>3", "mod p^2"),
    _c("C06", "sum g_k(x)/k", "sum g_k(x)/k = 0", "p>3", "mod p", xmode=True),
    _c("C07", "sum g_{k-1}/k", "sum g_{k-1}/k = -2 (p/3) q_p(3)", "p>3", "mod p"),
    _c("C08", "sum k g_k", "sum k g_k = -3/4", "p>3", "mod p^2"),
    _c("C09", "sum g_k(-1)/k^2", "sum g_k(-1)/k^2 = 0", "p>5", "mod p"),
    _c("C10", "sum g_k(-1)/k", "sum g_k(-1)/k = 0", "p>5", "mod p^2"),
    _c("C11", "harmonic f_k(-1)", "sum (-1)^k f_k(-1) H_k/k = -2 (-1/p) E_{p-3}", "p>5", "mod p"),
    _c("C12", "Franel over 8^k", "sum (3k+1) f_k/8^k = p^2 - 2p^3 q_p(2) + 4p^4 q_p(2)^2", "p>3", "mod p^5"),
    _c("C13", "g_k symmetry", "g_k = (p/3) 9^k g_{p-1-k}", "p>3", "mod p"),
    _c("C14", "sum g_k/(k 9^k)", "sum g_k/(k 9^k) = 2 q_p(3)", "p>3", "mod p"),
    _c("C15", "sum A_k(x)", "sum A_k(x) vs p sum (-1)^k f_k(x)/(2k+1)", "odd p", "mod p^2", xmode=True),
    _c("C16", "alternating A_k(x)", "sum (-1)^k A_k(x) vs p sum g_k(x)/(2k+1)", "odd p", "mod p^2", xmode=True),
    _c("C17", "odd power 1", "sum (2k+1) (-1)^k A_k = p (p/3)", "p>3", "mod p^3"),
    _c("C18", "odd power 3", "sum (2k+1)^3 (-1)^k A_k = -p/3 (p/3)", "p>3", "mod p^3"),
    _c("C19", "odd power 5", "sum (2k+1)^5 (-1)^k A_k = -13/27 p (p/3)", "p>3", "mod p^3"),
    _c("C20", "odd power 7", "sum (2k+1)^7 (-1)^k A_k = 5/9 p (p/3)", "p>3", "mod p^3"),
    _c("C21", "weighted A_k(x) mod p^4", "(1/p) sum (2k+1) A_k(x) vs sum g_k(x) - p^2 sum g_k(x) H2_k", "odd p", "mod p^4", xmode=True),
    _c("C22", "binomial product", "(-1)^k C(p-1,k) C(p+k,k) = 1 - p^2 H2_k for all k < p", "odd p", "mod p^4"),
    _c("C23", "g_{p-1}", "g_{p-1} = (p/3)(1 + 2p q_p(3))", "p>3", "mod p^2"),
    _c("C24", "sum (-3)^k/(2k+1)", "p sum (-3)^k/(2k+1) = (p/3)", "odd p", "mod p^2"),
    _c("C25", "u_k mod p^2", "k C(2k,k) u_k = p for 1 <= k < p", "any p", "mod p^2"),
    _c("C26", "g(x)/k mod p^2", "sum g_k(x)/k vs p sum x^k/k^2 - p sum (-1)^k H_k f_k(x)/k", "p>3", "mod p^2", xmode=True),
    _c("C27", "central binomial /k^2", "sum (-1)^k C(2k,k)/k^2 = 0", "p>3", "mod p"),
    _c("C28", "half-range /k^2", "sum_{k<=(p-1)/2} (-1)^k C(2k,k)/k^2 = 56/15 p B_{p-3}", "p>5", "mod p^2"),
    _c("C29", "central binomial pair", "a: sum C(2k,k)/(k 4^k) = 2 q_p(2) mod p; b: sum C(2k,k)/k = 0 mod p^2", "p>3", "mod p / p^2", parts=("a", "b")),
    _c("C30", "Franel analogues", "a: sum (-1)^k f_k/k^2 = 0 mod p; b: sum (-1)^k f_k/k = 0 mod p^2", "p>3", "mod p / p^2", parts=("a", "b")),
    Check("X01", "conjecture", "weight 9k^2+5k", "sum (9k^2+5k)(-1)^k f_k mod (n-1)n^2 and mod p^4"),
    Check("X02", "conjecture", "weight 4k+3", "(4k+3) g_k(x) integrality, odd integers, mod p^3"),
    Check("X03", "conjecture", "3-adic valuations", "3-adic valuations of sums of (2k+1)^(1,3) (-1)^k A_k"),
    Check("X04", "conjecture", "(-8)^k Franel", "F_n odd-integer claim and mod p^2 / p^4 congruences"),
    Check("X05", "conjecture", "g_k mod p^2", "sum g_{k-1}/k and sum g_k/9^k mod p^2"),
    Check("X06", "conjecture", "c_r constants", "empirical c_r table"),
    Check("X07", "conjecture", "known mod p^2 pair", "sum (-1)^k f_k and sum h_k mod p^2"),
)

BY_ID = {c.id: c for c in CATALOG}
KINDS = ("identity", "q", "congruence", "conjecture")


def resolve(selector: str) -> tuple[Check, frozenset[str] | None]:
    """Map an id such as 'C05' or a part id such as 'C29a' to its entry."""
    if selector in BY_ID:
        return BY_ID[selector], None
    base, part = selector[:-1], selector[-1:]
    entry = BY_ID.get(base)
    if entry is None or part not in entry.parts:
        raise KeyError(f"unknown check id {selector!r}")
    return entry, frozenset(part)


def _timed(fn: Callable[[], Any]) -> tuple[Any, float]:
    t0 = time.perf_counter()
    out = fn()
    return out, round((time.perf_counter() - t0) * 1000, 3)


def _fail(check_id: str, params: dict, mismatch: Mismatch, elapsed: float) -> CheckResult:
    witness = dict(mismatch.witness)
    table = witness.pop("table", None)
    return CheckResult(check_id, params, Status.FAIL, witness=witness, elapsed_ms=elapsed, table=table)


def run_identity(check_id: str, n_max: int, ctx: CheckContext | None = None) -> CheckResult:
    entry, parts = resolve(check_id)
    if entry.kind not in ("identity", "q"):
        raise ValueError(f"{check_id} is not an identity entry")
    ctx = ctx or CheckContext()
    if entry.kind == "q":
        n_max = min(n_max, ctx.q_max)
    params: dict[str, Any] = {"n_max": n_max}
    if entry.id == "I05":
        params["seed"] = ctx.seed
    if entry.id == "I07":
        params["mn_max"] = min(n_max, 8)
        params["xy"] = [-2, 3]

    def go():
        try:
            entry.body(ctx, n_max)
        except Mismatch as exc:
            return exc
        except IntegrityError as exc:
            return Mismatch(reason=str(exc))
        return None

    outcome, elapsed = _timed(go)
    if outcome is not None:
        return _fail(check_id, params, outcome, elapsed)
    return CheckResult(check_id, params, Status.PASS, elapsed_ms=elapsed)


def run_congruence(
    check_id: str,
    primes: tuple[int, int] | Iterable[int],
    mode: XMode | str | None = None,
    ctx: CheckContext | None = None,
) -> CheckResult:
    entry, parts = resolve(check_id)
    if entry.kind != "congruence":
        raise ValueError(f"{check_id} is not a congruence entry")
    ctx = replace(ctx or CheckContext(), parts=parts)
    if entry.xmode:
        ctx = replace(ctx, xmode=XMode(mode) if mode else (ctx.xmode or XMode.COEFFICIENT))
    plist = _prime_list(primes)
    admitted = [p for p in plist if entry.admits(p)]
    params: dict[str, Any] = {
        "primes": [plist[0], plist[-1]] if plist else [],
        "threshold": entry.threshold,
        "modulus": entry.modulus,
    }
    if entry.xmode:
        params["xmode"] = ctx.xmode.value
        if ctx.xmode is XMode.EVAL:
            params["points"] = list(ctx.points)
    if parts:
        params["parts"] = sorted(parts)
    if not admitted:
        return CheckResult(
            check_id, params, Status.SKIP,
            skip_reason=f"no prime in range satisfies {entry.threshold}",
        )
    below = [p for p in plist if not entry.admits(p)]
    if below:
        params["below_threshold"] = below

    skipped: dict[int, str] = {}

    def go():
        for p in admitted:
            try:
                entry.body(ctx, p)
            except Mismatch as exc:
                return exc
            except (NonUnitDenominator, Skip) as exc:
                skipped[p] = str(getattr(exc, "reason", exc))
        return None

    outcome, elapsed = _timed(go)
    if skipped:
        params["skipped"] = {str(p): why for p, why in skipped.items()}
    if outcome is not None:
        return _fail(check_id, params, outcome, elapsed)
    checked = [p for p in admitted if p not in skipped]
    params["checked"] = len(checked)
    if not checked:
        return CheckResult(check_id, params, Status.SKIP, skip_reason="every admitted prime was skipped",
                           elapsed_ms=elapsed)
    return CheckResult(check_id, params, Status.PASS, elapsed_ms=elapsed)


def explore_conjecture(
    check_id: str,
    n_max: int,
    primes: tuple[int, int] | Iterable[int],
    ctx: CheckContext | None = None,
) -> CheckResult:
    entry, _ = resolve(check_id)
    if entry.kind != "conjecture":
        raise ValueError(f"{check_id} is not a conjecture entry")
    ctx = ctx or CheckContext()
    plist = _prime_list(primes)
    params: dict[str, Any] = {"n_max": n_max, "primes": [plist[0], plist[-1]] if plist else []}
    if entry.id == "X06":
        params["r_max"] = ctx.r_max
        params["max_denominator"] = conjectures.C_R_MAX_DEN

    def go():
        try:
            return entry.body(ctx, n_max, plist)
        except Mismatch as exc:
            return exc

    outcome, elapsed = _timed(go)
    if isinstance(outcome, Mismatch):
        return _fail(check_id, params, outcome, elapsed)
    return CheckResult(check_id, params, Status.NO_COUNTEREXAMPLE, elapsed_ms=elapsed, table=outcome)


def _prime_list(primes) -> list[int]:
    if isinstance(primes, tuple) and len(primes) == 2 and primes[0] <= primes[1]:
        lo, hi = primes
        return primes_in(max(lo, 2), hi) if hi >= 2 else []
    return sorted(primes)


@dataclass
class RunSpec:
    """Range parameters shared by every check in one run."""

    n_max: int = 60
    primes: tuple[int, int] = (5, 50)
    xmode: XMode | None = None


def run_check(check_id: str, spec: RunSpec, ctx: CheckContext | None = None) -> CheckResult:
    entry, _ = resolve(check_id)
    if entry.kind in ("identity", "q"):
        return run_identity(check_id, spec.n_max, ctx)
    if entry.kind == "congruence":
        return run_congruence(check_id, spec.primes, spec.xmode, ctx)
    return explore_conjecture(check_id, spec.n_max, spec.primes, ctx)


def select(ids: Iterable[str] | str) -> list[str]:
    """Expand 'all' or a kind name; keep explicit ids in catalog order."""
    if isinstance(ids, str):
        ids = [ids]
    out: list[str] = []
    for token in ids:
        token = token.strip()
        if token == "all":
            out.extend(c.id for c in CATALOG)
        elif token in KINDS:
            out.extend(c.id for c in CATALOG if c.kind == token)
        else:
            resolve(token)
            out.append(token)
    order = {c.id: i for i, c in enumerate(CATALOG)}
    seen: dict[str, None] = {}
    for t in out:
        seen.setdefault(t, None)
    return sorted(seen, key=lambda t: (order[resolve(t)[0].id], t))
