import io
import json

import pytest

from spechtgb.suite import (
    CLAIMS, SuiteEntry, SuiteError, counterexample_entry, csv_text, default_suite, load_suite,
    parse_suite, run_suite, write_jsonl,
)

SMALL = [
    {"claim": "main1", "params": {"n": 4, "l": 1, "frontier": [[2, 2]]}},
    {"claim": "main2", "params": {"n": 4, "l": 2, "m": 2, "frontier": [[3, 2]]}},
    {"claim": "codimension", "params": {"n": 4, "l": 1, "lambda": [4]}, "expect": "fail"},
    {"claim": "m_le_2", "params": {"n": 4, "l": 1, "lambda": [2, 2], "m": 3}},
    {"claim": "lili_criterion", "params": {"n": 3, "Y": [[1, 2], [1, 2]]}},
    {"claim": "keylemma", "params": {"n": 4, "l": 1, "frontier": [[2, 1, 1]], "samples": 3}},
]


def jsonl(results, include_time=False):
    buf = io.StringIO()
    write_jsonl(results, buf, include_time)
    return buf.getvalue()


class TestParse:
    def test_round_trip(self):
        entries = parse_suite(SMALL)
        assert [e.to_json() for e in entries] == SMALL

    @pytest.mark.parametrize("data, msg", [
        ({"claim": "main1"}, "JSON list"),
        ([{"params": {}}], "no 'claim'"),
        ([{"claim": "nope"}], "unknown claim id"),
        ([{"claim": "main1", "expect": "maybe"}], "expect must be"),
    ])
    def test_errors(self, data, msg):
        with pytest.raises(SuiteError, match=msg):
            parse_suite(data)

    def test_suite_error_is_value_error(self):
        assert issubclass(SuiteError, ValueError)

    def test_load(self, tmp_path):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(SMALL))
        assert len(load_suite(str(path))) == len(SMALL)

    def test_default_suite_claims_known(self):
        entries = default_suite(4)
        assert entries and all(e.claim in CLAIMS for e in entries)
        assert {e.claim for e in default_suite(6)} == set(CLAIMS)


class TestRun:
    def test_outcomes(self):
        results = run_suite(parse_suite(SMALL))
        assert [r.outcome for r in results] == ["pass", "pass", "xfail", "fail", "pass", "pass"]
        assert [r.ok for r in results] == [True, True, True, False, True, True]

    def test_xpass(self):
        [r] = run_suite([SuiteEntry("main1", {"n": 4, "l": 1, "frontier": [[2, 2]]}, "fail")])
        assert r.outcome == "xpass" and not r.ok

    def test_error_outcome(self):
        [r] = run_suite([SuiteEntry("main1", {"n": 4, "l": 1, "frontier": [[3, 3]]})])
        assert r.outcome == "error" and "error" in r.report["evidence"]

    def test_timeout(self):
        [r] = run_suite([SuiteEntry("universal", {"n": 5, "l": 1, "lambda": [3, 2]})], time_cap=1e-6)
        assert r.outcome == "timeout"

    def test_deterministic_jsonl(self):
        entries = parse_suite(SMALL)
        a = jsonl(run_suite(entries))
        b = jsonl(run_suite(entries))
        c = jsonl(run_suite(entries, threads=2))
        assert a == b == c
        first = json.loads(a.splitlines()[0])
        assert first["tool"] == "spechtgb" and first["index"] == 0 and "seconds" not in first

    def test_timing_opt_in(self):
        text = jsonl(run_suite(parse_suite(SMALL[:1])), include_time=True)
        assert "seconds" in json.loads(text)

    def test_csv(self):
        text = csv_text(run_suite(parse_suite(SMALL[:2])))
        lines = text.splitlines()
        assert lines[0] == "claim,params,status,witness,seconds"
        assert lines[1].startswith("main1,") and len(lines) == 3

    def test_prime_field(self):
        [r] = run_suite(parse_suite(SMALL[:1]), field="prime:32003")
        assert r.outcome == "pass" and r.report["heuristic"]

    def test_bad_field(self):
        with pytest.raises(ValueError):
            run_suite(parse_suite(SMALL[:1]), field="reals")

    def test_counterexample_is_expected_failure(self):
        [r] = run_suite([counterexample_entry()])
        assert r.outcome == "xfail"
        assert "x4^2*x5^3*x6*x7^2" in r.report["evidence"]["missing_initial_generators"]
