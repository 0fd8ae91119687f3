"""Command-line front end: ``supercong list|seq|run|explore``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Sequence

from . import __version__
from .checks import CATALOG, CheckContext, CheckResult, Status, XMode
from .checks.common import DEFAULT_POINTS, I05_SEED
from .checks.registry import KINDS, RunSpec, resolve, run_check, select
from .sequences import POLY_FAMILIES, SeqId, SequenceStore

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(t) for t in text.split(".."))
    except ValueError:
        raise UsageError(f"expected lo..hi, got {text!r}") from None
    if lo > hi or hi < 2:
        raise UsageError(f"empty prime range {text!r}")
    return lo, hi


def parse_points(text: str) -> tuple[int, ...]:
    try:
        pts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"bad point list {text!r}") from None
    if not pts:
        raise UsageError("empty point list")
    return pts


# --- report assembly --------------------------------------------------------

def build_config(args: argparse.Namespace, ids: list[str]) -> dict[str, Any]:
    return {
        "checks": ids,
        "primes": list(args.primes),
        "nmax": args.nmax,
        "qmax": args.qmax,
        "rmax": args.rmax,
        "xmode": args.xmode,
        "points": list(args.points),
        "seed": I05_SEED,
        "format": args.format,
    }


def summarize(results: Sequence[CheckResult]) -> dict[str, int]:
    counts = {s.value: 0 for s in Status}
    for r in results:
        counts[r.status.value] += 1
    counts["total"] = len(results)
    return counts


def make_report(config: dict, results: Sequence[CheckResult], elapsed_ms: float) -> dict[str, Any]:
    return {
        "version": __version__,
        "config": config,
        "results": [r.to_dict() for r in results],
        "summary": summarize(results),
        "total_elapsed_ms": elapsed_ms,
    }


CSV_FIELDS = ("id", "status", "params", "witness", "skip_reason", "elapsed_ms")


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for rec in report["results"]:
        w.writerow({
            "id": rec["id"],
            "status": rec["status"],
            "params": json.dumps(rec["params"], sort_keys=True),
            "witness": "" if rec.get("witness") is None else json.dumps(rec["witness"], sort_keys=True),
            "skip_reason": rec.get("skip_reason") or "",
            "elapsed_ms": rec["elapsed_ms"],
        })
    return buf.getvalue()


def read_csv_triples(text: str) -> list[tuple[str, dict, str]]:
    """(id, params, status) triples from a CSV report."""
    return [(row["id"], json.loads(row["params"]), row["status"]) for row in csv.DictReader(io.StringIO(text))]


def render(report: dict, fmt: str) -> str:
    if fmt == "csv":
        return report_csv(report)
    return json.dumps(report, indent=2, sort_keys=False) + "\n"


# --- execution ---------------------------------------------------------------

_WORKER_CTX: dict[tuple, CheckContext] = {}


def _context(xmode: str | None, points: tuple[int, ...], qmax: int, rmax: int) -> CheckContext:
    key = (xmode, points, qmax, rmax)
    ctx = _WORKER_CTX.get(key)
    if ctx is None:
        ctx = CheckContext(
            store=SequenceStore(),
            xmode=XMode(xmode) if xmode else None,
            points=points,
            q_max=qmax,
            r_max=rmax,
        )
        _WORKER_CTX[key] = ctx
    return ctx


def _execute(job: tuple) -> dict:
    check_id, nmax, primes, xmode, points, qmax, rmax = job
    ctx = _context(xmode, points, qmax, rmax)
    spec = RunSpec(n_max=nmax, primes=primes, xmode=XMode(xmode) if xmode else None)
    return run_check(check_id, spec, ctx).to_dict()


def execute(ids: list[str], args: argparse.Namespace) -> list[CheckResult]:
    jobs = [(i, args.nmax, tuple(args.primes), args.xmode, tuple(args.points), args.qmax, args.rmax) for i in ids]
    width = max(1, min(args.jobs or os.cpu_count() or 1, len(jobs)))
    if width == 1:
        out = [_execute(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=width) as pool:
            # map preserves submission order, so the report is in catalog order
            out = list(pool.map(_execute, jobs))
    return [CheckResult.from_dict(d) for d in out]


# --- subcommands -------------------------------------------------------------

def cmd_list(args: argparse.Namespace) -> int:
    for c in CATALOG:
        if args.filter and c.kind != args.filter:
            continue
        cols = [c.id, c.label]
        if c.kind == "congruence":
            cols += [c.threshold.replace(" ", ""), c.modulus]
            if c.xmode:
                cols.append("[xmode]")
        else:
            cols.append(c.kind)
        cols.append(c.summary)
        print("  ".join(cols))
    return EXIT_OK


def cmd_seq(args: argparse.Namespace) -> int:
    try:
        sid = SeqId(args.name)
    except ValueError:
        names = ", ".join(s.value for s in SeqId)
        raise UsageError(f"unknown sequence {args.name!r}; choose from {names}") from None
    if args.n < 0:
        raise UsageError("n must be non-negative")
    store = SequenceStore()
    if sid in POLY_FAMILIES:
        if args.x is None:
            print(store.poly(sid, args.n).format("x"))
        else:
            print(store.at(sid, args.n, args.x))
        return EXIT_OK
    if args.x is not None:
        raise UsageError(f"{sid.value} is a scalar sequence; --x does not apply")
    print(store.value(sid, args.n))
    return EXIT_OK


def _emit(report: dict, args: argparse.Namespace) -> None:
    text = render(report, args.format)
    if args.output:
        try:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise OSError(f"cannot write report to {args.output}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def _summary_line(report: dict) -> str:
    s = report["summary"]
    parts = [f"{k}={v}" for k, v in s.items() if v or k in ("PASS", "FAIL", "total")]
    return " ".join(parts) + f"  ({report['total_elapsed_ms'] / 1000:.1f}s)"


def cmd_run(args: argparse.Namespace) -> int:
    try:
        ids = select([t for t in args.checks.split(",") if t.strip()])
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    if not ids:
        raise UsageError("no checks selected")
    if args.output:
        _probe_writable(args.output)
    t0 = time.perf_counter()
    results = execute(ids, args)
    report = make_report(build_config(args, ids), results, round((time.perf_counter() - t0) * 1000, 3))
    _emit(report, args)
    out = sys.stdout if args.output else sys.stderr
    for r in results:
        if r.status is Status.FAIL:
            print(f"FAIL {r.id} {json.dumps(r.witness, sort_keys=True)}", file=out)
    print(_summary_line(report), file=out)
    return EXIT_FAIL if report["summary"]["FAIL"] else EXIT_OK


def cmd_explore(args: argparse.Namespace) -> int:
    entry, _ = _lookup(args.id)
    if entry.kind != "conjecture":
        raise UsageError(f"{args.id} is not a conjecture entry")
    args.checks = entry.id
    args.jobs = 1
    if args.output:
        _probe_writable(args.output)
    t0 = time.perf_counter()
    results = execute([entry.id], args)
    report = make_report(build_config(args, [entry.id]), results, round((time.perf_counter() - t0) * 1000, 3))
    if args.output:
        _emit(report, args)
    r = results[0]
    print(f"{r.id} {r.status.value}")
    if r.witness:
        print("witness:", json.dumps(r.witness, sort_keys=True))
    for row in r.table or []:
        print(json.dumps(row, sort_keys=False))
    return EXIT_FAIL if r.status is Status.FAIL else EXIT_OK


def _lookup(check_id: str):
    try:
        return resolve(check_id)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None


def _probe_writable(path: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    if not os.path.isdir(directory) or not os.access(directory, os.W_OK) or (
        os.path.exists(path) and not os.access(path, os.W_OK)
    ):
        raise OSError(f"cannot write report to {path}")


# --- parser ------------------------------------------------------------------

def _run_options(p: argparse.ArgumentParser, default_primes: str) -> None:
    p.add_argument("--primes", default=default_primes, type=str, help="inclusive prime range lo..hi")
    p.add_argument("--nmax", type=int, default=60, help="largest n for identities and conjectures")
    p.add_argument("--qmax", type=int, default=10, help="largest n for the q-analogue checks")
    p.add_argument("--rmax", type=int, default=5, help="largest r for the c_r table")
    p.add_argument("--xmode", choices=[m.value for m in XMode], default=None,
                   help="comparison mode for polynomial congruences (default coefficient)")
    p.add_argument("--points", default=",".join(map(str, DEFAULT_POINTS)), help="evaluation points for eval mode")
    p.add_argument("--output", "-o", default=None, help="report path (default: standard output)")
    p.add_argument("--format", choices=("json", "csv"), default="json")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="supercong", description=__doc__)
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("list", help="print the check catalog")
    p.add_argument("--filter", choices=KINDS)
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("seq", help="print one sequence value")
    p.add_argument("name")
    p.add_argument("n", type=int)
    p.add_argument("--x", type=int, default=None, help="evaluate a polynomial family at this integer")
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("run", help="run checks and write a report")
    p.add_argument("--checks", default="all", help="comma-separated ids, kinds, or 'all'")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    _run_options(p, "5..50")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("explore", help="explore one conjecture and print its table")
    p.add_argument("id")
    _run_options(p, "2..199")
    p.set_defaults(func=cmd_explore)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if hasattr(args, "primes"):
            args.primes = parse_range(args.primes)
            args.points = parse_points(args.points)
            if args.nmax < 1 or args.qmax < 0 or args.rmax < 0:
                raise UsageError("nmax must be >= 1; qmax and rmax >= 0")
        return args.func(args)
    except UsageError as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"supercong: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
