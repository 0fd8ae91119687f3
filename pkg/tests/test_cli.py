import json
import subprocess
import sys

import pytest

from supercong.checks import CheckResult
from supercong.cli import main, read_csv_triples


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def strip_timing(report):
    report = dict(report)
    report.pop("total_elapsed_ms")
    report["results"] = [{k: v for k, v in r.items() if k != "elapsed_ms"} for r in report["results"]]
    return report


def test_list(capsys):
    code, out, _ = run(["list"], capsys)
    rows = out.splitlines()
    assert code == 0 and len(rows) == 64
    assert any(r.startswith("C03  sum g_k from 1  p>3  mod p^4") for r in rows)


@pytest.mark.parametrize("kind, ids", [
    ("conjecture", [f"X0{i}" for i in range(1, 8)]),
    ("q", [f"Q0{i}" for i in range(1, 6)]),
])
def test_list_filter(kind, ids, capsys):
    _, out, _ = run(["list", "--filter", kind], capsys)
    assert [r.split()[0] for r in out.splitlines()] == ids


@pytest.mark.parametrize("argv, expected", [
    (["seq", "g", "4"], "639"),
    (["seq", "g_poly", "2"], "1 + 8*x + 6*x^2"),
    (["seq", "g_poly", "2", "--x=-1"], "-1"),
    (["seq", "apery", "3"], "1445"),
])
def test_seq(argv, expected, capsys):
    code, out, _ = run(argv, capsys)
    assert code == 0 and out.strip() == expected


@pytest.mark.parametrize("argv", [
    ["seq", "nope", "3"],
    ["seq", "g", "3", "--x=2"],
    ["run", "--checks", "C99"],
    ["run", "--primes", "9..3"],
    ["run", "--primes", "five"],
    ["bogus"],
])
def test_usage_errors_exit_2(argv, capsys):
    assert run(argv, capsys)[0] == 2


def test_unwritable_output(tmp_path, capsys):
    code, _, err = run(["run", "--checks", "C05", "--output", str(tmp_path / "missing" / "r.json")], capsys)
    assert code == 2 and "cannot write" in err


def test_run_two_pass_records(tmp_path, capsys):
    out = tmp_path / "r.json"
    code, stdout, _ = run(["run", "--checks", "C05,C08", "--primes", "5..13", "-o", str(out)], capsys)
    report = json.loads(out.read_text())
    assert code == 0
    assert [(r["id"], r["status"]) for r in report["results"]] == [("C05", "PASS"), ("C08", "PASS")]
    assert "PASS=2" in stdout


def test_run_threshold_skip(capsys):
    code, stdout, _ = run(["run", "--checks", "C09", "--primes", "5..5"], capsys)
    report = json.loads(stdout)
    assert code == 0
    assert [r["status"] for r in report["results"]] == ["SKIP"]
    assert "p>5" in report["results"][0]["skip_reason"]


def test_json_round_trip(tmp_path, capsys):
    out = tmp_path / "r.json"
    run(["run", "--checks", "identity,C01,C13,X03", "--primes", "5..31", "--nmax", "20", "-o", str(out)], capsys)
    report = json.loads(out.read_text())
    assert report["config"]["seed"] == 20150917
    rebuilt = [CheckResult.from_dict(r).to_dict() for r in report["results"]]
    assert rebuilt == report["results"]
    tallies = {}
    for r in report["results"]:
        tallies[r["status"]] = tallies.get(r["status"], 0) + 1
    assert all(report["summary"].get(k) == v for k, v in tallies.items())
    assert report["summary"]["total"] == len(report["results"])


def test_csv_and_json_agree(tmp_path, capsys):
    base = ["run", "--checks", "C02,C05,C09,C29,X05", "--primes", "3..29"]
    run(base + ["-o", str(tmp_path / "r.json")], capsys)
    run(base + ["--format", "csv", "-o", str(tmp_path / "r.csv")], capsys)
    report = json.loads((tmp_path / "r.json").read_text())
    json_triples = [(r["id"], r["params"], r["status"]) for r in report["results"]]
    assert read_csv_triples((tmp_path / "r.csv").read_text()) == json_triples


def test_exit_code_tracks_failures(capsys):
    # C27 has a genuine counterexample at p = 5
    code, stdout, err = run(["run", "--checks", "C27", "--primes", "5..13"], capsys)
    assert code == 1 and "FAIL C27" in err
    assert json.loads(stdout)["summary"]["FAIL"] == 1
    assert run(["run", "--checks", "C27", "--primes", "7..13"], capsys)[0] == 0


def test_full_desk_run(tmp_path, capsys):
    out = tmp_path / "all.json"
    code, _, _ = run(["run", "--checks", "all", "--primes", "5..50", "--nmax", "30", "-o", str(out)], capsys)
    report = json.loads(out.read_text())
    fails = [r for r in report["results"] if r["status"] == "FAIL"]
    assert [r["id"] for r in fails] == ["C27"] and fails[0]["witness"]["p"] == 5
    assert code == 1
    code, _, _ = run(["run", "--checks", "all", "--primes", "7..50", "--nmax", "30", "-o", str(out)], capsys)
    assert code == 0


def test_jobs_do_not_change_the_report(tmp_path, capsys):
    argv = ["run", "--checks", "C01,C05,C17,I03,X06", "--primes", "5..40"]
    run(argv + ["--jobs", "1", "-o", str(tmp_path / "a.json")], capsys)
    run(argv + ["--jobs", "3", "-o", str(tmp_path / "b.json")], capsys)
    a = json.loads((tmp_path / "a.json").read_text())
    b = json.loads((tmp_path / "b.json").read_text())
    assert strip_timing(a) == strip_timing(b)


def test_explore_prints_table(capsys):
    code, out, _ = run(["explore", "X03", "--nmax", "9"], capsys)
    lines = out.splitlines()
    assert code == 0 and lines[0] == "X03 NO-COUNTEREXAMPLE" and len(lines) == 10
    assert run(["explore", "C05"], capsys)[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "supercong.cli", "seq", "franel", "3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.strip() == "56"
