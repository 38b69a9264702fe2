"""Suites of claims: parsing, a default suite, parallel execution and reports.

A suite file is a JSON list of entries::

    {"claim": "main1", "params": {"n": 5, "l": 2, "frontier": [[3, 3]]}, "expect": "pass"}

``expect`` defaults to ``"pass"``; ``"fail"`` marks a known counterexample
whose failure is the expected outcome.
"""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from . import __version__
from .partitions import Filter, Partition, enumerate_partitions, lower_filters
from .poly import MonomialOrder, Polynomial, parse_field
from .specht import IdealSpec, delta_m
from . import verify


class SuiteError(ValueError):
    pass


def _filter(p: dict) -> Filter:
    return Filter(int(p["n"]), int(p.get("l", 1)), "lower", p.get("frontier", []))


def _order(p: dict):
    return MonomialOrder.parse(p["order"]) if p.get("order") else None


def _poly_param(p: dict, spec: IdealSpec, fld):
    if "delta" in p:
        return delta_m(int(p["delta"]), spec.n)
    return Polynomial.parse(p["f"], spec.n, fld)


def _lam_or_filter(p: dict):
    return Partition(p["lambda"]) if "lambda" in p else _filter(p)


CLAIMS: dict[str, Callable] = {
    "main1": lambda p, fld, dl: verify.check_main1(
        int(p["n"]), int(p.get("l", 1)), _filter(p), _order(p), field=fld, deadline=dl),
    "main1_5": lambda p, fld, dl: verify.check_main1_5(
        int(p["n"]), int(p.get("l", 1)), _lam_or_filter(p), field=fld, deadline=dl),
    "main2": lambda p, fld, dl: verify.check_main2(
        int(p["n"]), int(p.get("l", 1)), int(p["m"]), _filter(p), _order(p), field=fld, deadline=dl),
    "mixed_radical": lambda p, fld, dl: verify.check_mixed_radical(
        int(p["n"]), int(p.get("l", 1)), int(p["m"]), Partition(p["lambda"]), field=fld, deadline=dl),
    "codimension": lambda p, fld, dl: verify.check_codimension(
        int(p["n"]), int(p.get("l", 1)), Partition(p["lambda"]), field=fld, deadline=dl),
    "radicality_witness": lambda p, fld, dl: (lambda spec: verify.check_radicality_witness(
        spec, _poly_param(p, spec, fld), _order(p), field=fld, deadline=dl))(
        IdealSpec.from_json(p["spec"])),
    "lili_criterion": lambda p, fld, dl: verify.check_lili_criterion(
        int(p["n"]), p["Y"], field=fld, deadline=dl),
    "m_le_2": lambda p, fld, dl: verify.check_m_le_2(
        int(p["n"]), int(p.get("l", 1)), Partition(p["lambda"]), int(p.get("m", 2)),
        field=fld, deadline=dl),
    "universal": lambda p, fld, dl: verify.universal_search(
        int(p["n"]), int(p.get("l", 1)), Partition(p["lambda"]), bool(p.get("lex_exhaustive", True)),
        int(p.get("trials", 0)), int(p.get("seed", 0)), field=fld, deadline=dl),
    "keylemma": lambda p, fld, dl: verify.check_keylemma(
        int(p["n"]), int(p.get("l", 1)), _filter(p), int(p.get("samples", 5)),
        int(p.get("seed", 0)), field=fld),
}


@dataclass(frozen=True)
class SuiteEntry:
    claim: str
    params: dict
    expect: str = "pass"

    def to_json(self) -> dict:
        out = {"claim": self.claim, "params": self.params}
        if self.expect != "pass":
            out["expect"] = self.expect
        return out


def parse_suite(data) -> list[SuiteEntry]:
    if not isinstance(data, list):
        raise SuiteError("a suite is a JSON list of claim entries")
    out = []
    for k, item in enumerate(data):
        if not isinstance(item, dict) or "claim" not in item:
            raise SuiteError(f"entry {k} has no 'claim'")
        if item["claim"] not in CLAIMS:
            raise SuiteError(f"unknown claim id {item['claim']!r} in entry {k}")
        expect = item.get("expect", "pass")
        if expect not in ("pass", "fail"):
            raise SuiteError(f"entry {k}: expect must be 'pass' or 'fail'")
        out.append(SuiteEntry(item["claim"], dict(item.get("params", {})), expect))
    return out


def load_suite(path: str) -> list[SuiteEntry]:
    with open(path, encoding="utf-8") as fh:
        return parse_suite(json.load(fh))


@dataclass
class SuiteResult:
    index: int
    entry: SuiteEntry
    report: dict
    outcome: str  # pass | fail | xfail | xpass | timeout | error
    seconds: float

    @property
    def ok(self) -> bool:
        return self.outcome in ("pass", "xfail")

    def record(self, include_time: bool = False) -> dict:
        out = {"index": self.index, "tool": "spechtgb", "version": __version__,
               "expect": self.entry.expect, "outcome": self.outcome, **self.report}
        if include_time:
            out["seconds"] = round(self.seconds, 3)
        return out


def run_entry(args: tuple) -> SuiteResult:
    index, entry, field_name, time_cap = args
    fld = parse_field(field_name)
    t0 = time.perf_counter()
    deadline = time.monotonic() + time_cap if time_cap else None
    try:
        rep = CLAIMS[entry.claim](entry.params, fld, deadline)
        report = rep.to_json()
        status = rep.status
        if status == "pass":
            outcome = "xpass" if entry.expect == "fail" else "pass"
        else:
            outcome = "xfail" if entry.expect == "fail" else "fail"
    except TimeoutError:
        report = {"claim": entry.claim, "params": entry.params, "status": "timeout"}
        outcome = "timeout"
    except (ValueError, KeyError, TypeError) as exc:
        report = {"claim": entry.claim, "params": entry.params, "status": "error",
                  "evidence": {"error": str(exc)}}
        outcome = "error"
    return SuiteResult(index, entry, report, outcome, time.perf_counter() - t0)


def run_suite(entries: Sequence[SuiteEntry], threads: int = 1, field: str = "rational",
              time_cap: float | None = None) -> list[SuiteResult]:
    """Run every entry; results come back in suite order whatever the pool size."""
    parse_field(field)
    jobs = [(k, e, field, time_cap) for k, e in enumerate(entries)]
    if threads <= 1 or len(jobs) <= 1:
        results = [run_entry(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_entry, jobs, chunksize=1))
    return sorted(results, key=lambda r: r.index)


def write_jsonl(results: Iterable[SuiteResult], stream, include_time: bool = False) -> None:
    for r in results:
        stream.write(json.dumps(r.record(include_time), sort_keys=True) + "\n")


def write_csv(results: Iterable[SuiteResult], stream) -> None:
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["claim", "params", "status", "witness", "seconds"])
    for r in results:
        w.writerow([r.entry.claim, json.dumps(r.entry.params, sort_keys=True), r.outcome,
                    r.report.get("witness") or "", f"{r.seconds:.3f}"])


def csv_text(results: Sequence[SuiteResult]) -> str:
    buf = io.StringIO()
    write_csv(results, buf)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# default suite


def _frontier(F: Filter) -> list[list[int]]:
    return [p.to_json() for p in F.frontier]


def default_suite(max_weight: int = 6) -> list[SuiteEntry]:
    """Every claim family on all small cases with ``n + l - 1 <= max_weight``."""
    out: list[SuiteEntry] = []
    for w in range(2, max_weight + 1):
        for l in (1, 2, 3):
            n = w - l + 1
            if n < 2:
                continue
            for F in lower_filters(n, l):
                out.append(SuiteEntry("main1", {"n": n, "l": l, "frontier": _frontier(F)}))
                for m in range(1, n + 1):
                    out.append(SuiteEntry("main2", {"n": n, "l": l, "m": m, "frontier": _frontier(F)}))
            for lam in enumerate_partitions(w, l):
                base = {"n": n, "l": l, "lambda": lam.to_json()}
                # one row gives the unit ideal, where the codimension formula breaks
                out.append(SuiteEntry("codimension", base, "fail" if lam.first == w else "pass"))
                out.append(SuiteEntry("m_le_2", {**base, "m": 2}))
                if l <= 2:
                    out.append(SuiteEntry("main1_5", base))
                for m in range(1, n + 1):
                    out.append(SuiteEntry("mixed_radical", {**base, "m": m}))
    out.append(SuiteEntry("radicality_witness", {
        "spec": {"family": "mixed", "n": 4, "l": 1, "lambda": [2, 2], "m": 3}, "delta": 3}))
    out.append(SuiteEntry("lili_criterion", {"n": 3, "Y": [[1, 2], [1, 2]]}))
    out.append(SuiteEntry("lili_criterion", {"n": 4, "Y": [[1, 2], [1]]}))
    out.append(SuiteEntry("universal", {"n": 4, "l": 1, "lambda": [2, 2], "lex_exhaustive": True}))
    out.append(SuiteEntry("universal", {"n": 4, "l": 2, "lambda": [3, 2], "lex_exhaustive": True}))
    out.append(SuiteEntry("keylemma", {"n": 5, "l": 1, "frontier": [[3, 2]], "samples": 5}))
    out.append(SuiteEntry("keylemma", {"n": 4, "l": 2, "frontier": [[3, 2]], "samples": 5}))
    return out


def counterexample_entry() -> SuiteEntry:
    """The tail-variant filter whose standard generators are not a Groebner basis."""
    return SuiteEntry("main1_5", {"n": 7, "l": 2, "frontier": [[4, 2, 1, 1], [3, 3, 2]]}, "fail")
