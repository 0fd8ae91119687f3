"""Acceptance criteria 1-7.  Each test prints one PASS/FAIL line."""
import json
import time
from fractions import Fraction

import pytest

from supercong.checks import (
    CATALOG,
    CheckContext,
    Status,
    explore_conjecture,
    run_congruence,
    run_identity,
)
from supercong.checks.common import residue
from supercong.cli import main
from supercong.qseries import QLaurent, QXPoly, a_q
from supercong.sequences import SeqId, SequenceStore, partial_weighted_sum

MOD_P = ["C01", "C06", "C07", "C09", "C11", "C13", "C14", "C22", "C25", "C27", "C29a", "C30a"]
HIGH_POWER = ["C02", "C03", "C04", "C05", "C08", "C10", "C12", "C15", "C16", "C17", "C18",
              "C19", "C20", "C21", "C23", "C24", "C26", "C28", "C29b", "C30b"]


@pytest.fixture
def verdict(capsys):
    def emit(number, ok, detail):
        with capsys.disabled():
            print(f"\nacceptance criterion {number}: {'PASS' if ok else 'FAIL'} ({detail})")
        return ok
    return emit


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_1_identities(verdict):
    ctx = CheckContext(store=SequenceStore())
    ids = [c.id for c in CATALOG if c.kind == "identity"]
    results, secs = timed(lambda: [run_identity(i, 60, ctx) for i in ids])
    bad = [r.id for r in results if r.status is not Status.PASS]
    s = ctx.store
    anchors = (
        sum(c * s.value(SeqId.FRANEL, k) for k, c in enumerate((1, 2, 1))) == 15 == s.value(SeqId.G, 2),
        Fraction(partial_weighted_sum("4k+3", SeqId.G, 3, store=s), 27) == 7,
        Fraction(partial_weighted_sum("3k+1", SeqId.FRANEL, 2, ratio=8, store=s), 4) == 4,
    )
    ok = not bad and all(anchors) and secs < 60
    verdict(1, ok, f"{len(ids) - len(bad)}/{len(ids)} PASS, anchors {anchors}, {secs:.1f}s")
    assert ok, bad


def test_criterion_2_q_suite(verdict):
    ctx = CheckContext(q_max=10)
    ids = [c.id for c in CATALOG if c.kind == "q"]
    results, secs = timed(lambda: [run_identity(i, 10, ctx) for i in ids])
    bad = [r.id for r in results if r.status is not Status.PASS]
    one_plus_q = QLaurent([1, 1])
    anchor = a_q(1) == QXPoly([QLaurent([0, 0, 1]), one_plus_q * one_plus_q])
    ok = not bad and anchor and secs < 30
    verdict(2, ok, f"{len(ids) - len(bad)}/{len(ids)} PASS up to n=10, A_1 anchor {anchor}, {secs:.1f}s")
    assert ok, bad


# p = 5 is admitted for C27 but the sum is 2 mod 5 there; see the decisions ledger
@pytest.mark.xfail(strict=True, reason="C27 has a counterexample at p=5")
def test_criterion_3_mod_p_suite(verdict):
    ctx = CheckContext(store=SequenceStore())
    results, secs = timed(lambda: [run_congruence(i, (2, 499), ctx=ctx) for i in MOD_P])
    bad = {r.id: r.witness for r in results if r.status is not Status.PASS}
    ok = not bad and secs < 300
    verdict(3, ok, f"{len(MOD_P) - len(bad)}/{len(MOD_P)} PASS for p<=499, failures {bad}, {secs:.1f}s")
    assert ok, bad


def test_criterion_4_high_power_suite(verdict):
    ctx = CheckContext(store=SequenceStore())
    results, secs = timed(lambda: [run_congruence(i, (2, 199), ctx=ctx) for i in HIGH_POWER])
    bad = {r.id: r.witness for r in results if r.status is not Status.PASS}
    s = ctx.store
    anchors = {
        "C05": residue(sum(s.at(SeqId.G_POLY, k, -3) for k in range(5)), 5, 2),
        "C08": residue(sum(k * s.value(SeqId.G, k) for k in range(5)), 5, 2),
        "C23": residue(s.value(SeqId.G, 4), 5, 2),
        "C04": residue(sum(s.value(SeqId.S_GNEG1, k) for k in range(5)), 5, 3),
    }
    ok = not bad and anchors == {"C05": 24, "C08": 18, "C23": 14, "C04": 76} and secs < 600
    verdict(4, ok, f"{len(HIGH_POWER) - len(bad)}/{len(HIGH_POWER)} PASS for p<=199, p=5 anchors {anchors}, {secs:.1f}s")
    assert ok, bad


def test_criterion_5_conjectures(verdict):
    ctx = CheckContext(store=SequenceStore(), r_max=5)
    ids = ["X01", "X02", "X04", "X05", "X07"]
    results = [explore_conjecture(i, 60, (2, 199), ctx) for i in ids]
    bad = [r.id for r in results if r.status is not Status.NO_COUNTEREXAMPLE]
    x03 = explore_conjecture("X03", 81, (2, 199), ctx)
    refined = [row["n"] for row in x03.table if "refined" in row and row["refined"] == row["nu3_sum3"]]
    x03_ok = x03.status is Status.NO_COUNTEREXAMPLE and len(x03.table) == 81 and refined == list(range(3, 82, 3))
    x06 = explore_conjecture("X06", 60, (2, 199), ctx)
    known = {0: 1, 1: "-1/3", 2: "-13/27", 3: "5/9"}
    x06_ok = x06.status is Status.NO_COUNTEREXAMPLE and all(
        row["candidate"] == known[row["r"]] and row["matches_expected"] and len(row["primes"]) >= 5
        for row in x06.table if row["r"] in known
    )
    ok = not bad and x03_ok and x06_ok
    verdict(5, ok, f"X01,X02,X04,X05,X07 clean={not bad}, X03 table to 81={x03_ok}, X06 c_0..c_3={x06_ok}")
    assert ok


def test_criterion_6_integrity(verdict):
    bad = run_congruence("C23", (5, 5), ctx=CheckContext(store=SequenceStore(perturb={(SeqId.G, 4): 1})))
    good = run_congruence("C23", (5, 5), ctx=CheckContext(store=SequenceStore()))
    w = bad.witness or {}
    ok = (bad.status is Status.FAIL and (w.get("lhs"), w.get("rhs"), w.get("modulus")) == (15, 14, 25)
          and good.status is Status.PASS)
    verdict(6, ok, f"perturbed {bad.status.value} witness {w}, restored {good.status.value}")
    assert ok


def test_criterion_7_determinism(verdict, tmp_path, capsys):
    def once(name):
        path = tmp_path / name
        main(["run", "--checks", "all", "-o", str(path)])
        capsys.readouterr()
        report = json.loads(path.read_text())
        report.pop("total_elapsed_ms")
        for r in report["results"]:
            r.pop("elapsed_ms")
        return report

    a, b = once("a.json"), once("b.json")
    ok = a == b and len(a["results"]) == 64
    verdict(7, ok, f"two full runs identical apart from timings: {a == b}")
    assert ok
