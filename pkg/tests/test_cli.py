import io
import json

import pytest

from spechtgb import __version__
from spechtgb.cli import default_threads, main, parse_chain, parse_frontier


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run(*argv, "--output", "json")
    return code, json.loads(text.splitlines()[0])


class TestHelpers:
    def test_parse_frontier(self):
        assert parse_frontier("4,2,1,1;3,3,2") == [[4, 2, 1, 1], [3, 3, 2]]
        assert parse_frontier("") == []

    def test_parse_chain(self):
        assert parse_chain("1,2;1") == [[1, 2], [1]]
        assert parse_chain("1,2;") == [[1, 2], []]

    def test_threads_env(self, monkeypatch):
        monkeypatch.setenv("SPECHT_GB_THREADS", "3")
        assert default_threads() == 3
        monkeypatch.setenv("SPECHT_GB_THREADS", "junk")
        assert default_threads() == 1
        monkeypatch.delenv("SPECHT_GB_THREADS")
        assert default_threads() == 1


class TestStab:
    def test_eleven(self):
        code, text = run("stab", "--n", "6", "--l", "2", "--lambda", "3,3,1")
        assert code == 0 and text.startswith("count: 11\n")
        assert "1 1 2/3 4 5/6" in text

    def test_json_header(self):
        code, data = run_json("stab", "--n", "4", "--lambda", "2,2")
        assert code == 0 and data["count"] == 2
        assert data["tool"] == "spechtgb" and data["version"] == __version__
        assert data["field"] == "rational"

    def test_weight_mismatch(self):
        assert run("stab", "--n", "6", "--l", "2", "--lambda", "3,3")[0] == 2

    def test_bad_lambda(self):
        assert run("stab", "--n", "3", "--lambda", "1,2")[0] == 2


class TestGb:
    ARGS = ("gb", "--family", "specht_filter", "--n", "5", "--l", "2", "--lambda", "3,3",
            "--standard-only")

    def test_order_ascending(self):
        code, data = run_json(*self.ARGS, "--order", "lex:5,4,3,2,1")
        assert code == 0 and data["initial_degrees"] == {"3": 3, "4": 2}

    def test_order_descending(self):
        code, data = run_json(*self.ARGS, "--order", "lex:1,2,3,4,5")
        assert code == 0 and data["initial_degrees"] == {"3": 3, "4": 3, "6": 1}

    def test_verify_only(self):
        code, data = run_json(*self.ARGS, "--verify-only")
        assert code == 0 and data["verified"] and "basis" not in data

    def test_tail_counterexample_verify_only_fails(self):
        code, data = run_json("gb", "--family", "specht_filter", "--variant", "tail", "--n", "7",
                              "--l", "2", "--frontier", "4,2,1,1;3,3,2", "--standard-only",
                              "--verify-only")
        assert code == 1 and not data["verified"]

    def test_small_basis(self):
        code, data = run_json("gb", "--n", "2", "--lambda", "1,1")
        assert code == 0 and data["basis"] == ["-x1 + x2"]

    @pytest.mark.parametrize("order", ["lex:1,2,3", "lex:1,1,2,3,4", "foo:1,2,3,4,5"])
    def test_bad_order(self, order):
        assert run(*self.ARGS, "--order", order)[0] == 2

    def test_standard_only_mixed_rejected(self):
        assert run("gb", "--family", "mixed", "--n", "4", "--lambda", "2,2", "--m", "3",
                   "--standard-only")[0] == 2

    def test_degree_cap(self):
        assert run("gb", "--family", "mixed", "--n", "4", "--lambda", "2,2", "--m", "3",
                   "--degree-cap", "2")[0] == 2

    def test_prime_field(self):
        code, data = run_json(*self.ARGS, "--field", "prime:101")
        assert code == 0 and data["field"] == "GF(101)"

    def test_bad_field(self):
        assert run(*self.ARGS, "--field", "reals")[0] == 2

    def test_missing_filter(self):
        assert run("gb", "--family", "specht_filter", "--n", "4")[0] == 2

    def test_pretty_and_csv(self):
        code, text = run(*self.ARGS)
        assert code == 0 and "verified: True" in text
        code, text = run(*self.ARGS, "--output", "csv")
        assert code == 0 and text.splitlines()[0].split(",")[0] == "basis_size"


class TestGens:
    def test_lili(self):
        code, data = run_json("gens", "--family", "lili", "--n", "3", "--Y", "1,2;1,2")
        assert code == 0 and data["count"] >= 1

    def test_mixed(self):
        code, data = run_json("gens", "--family", "mixed", "--n", "4", "--lambda", "2,2", "--m", "3")
        assert code == 0 and data["count"] == 3


class TestClaims:
    def test_codim_pass(self):
        code, data = run_json("codim", "--n", "4", "--lambda", "2,2")
        assert code == 0 and data["status"] == "pass"

    def test_codim_one_row_fails(self):
        code, data = run_json("codim", "--n", "4", "--lambda", "4")
        assert code == 1 and data["evidence"]["unit_ideal"]

    def test_radical_witness_delta(self):
        code, data = run_json("radical-witness", "--family", "mixed", "--n", "4", "--lambda", "2,2",
                              "--m", "3", "--delta", "3")
        assert code == 0 and data["status"] == "pass"

    def test_radical_witness_poly_member(self):
        code, _ = run("radical-witness", "--family", "mixed", "--n", "4", "--lambda", "2,2",
                      "--m", "3", "--poly", "0")
        assert code == 1

    def test_radical_search(self):
        code, data = run_json("radical-witness", "--family", "lili", "--n", "3", "--Y", "1,2;1,2")
        assert code == 0 and data["status"] == "witness"

    def test_universal(self):
        code, data = run_json("universal", "--n", "4", "--lambda", "2,2")
        assert code == 0 and data["evidence"]["passed"] == 24

    def test_universal_cap(self):
        assert run("universal", "--n", "7", "--lambda", "4,3")[0] == 2

    def test_universal_weight_mismatch(self):
        assert run("universal", "--n", "6", "--l", "2", "--lambda", "3,3")[0] == 2

    def test_universal_random_only(self):
        code, data = run_json("universal", "--n", "7", "--lambda", "6,1", "--random-only",
                              "--trials", "2", "--seed", "5")
        assert code == 0 and data["seed"] == 5 and data["evidence"]["checked"] == 2

    def test_universal_vacuous_warns(self, capsys):
        code, _ = run("universal", "--n", "4", "--lambda", "2,2", "--no-exhaustive")
        assert code == 0 and "vacuous" in capsys.readouterr().err

    def test_timing_flag(self):
        code, data = run_json("codim", "--n", "4", "--lambda", "2,2", "--timing")
        assert "seconds" in data

    def test_time_cap(self):
        assert run("universal", "--n", "5", "--lambda", "3,2", "--time-cap", "0.000001")[0] == 1

    def test_nonpositive_caps(self):
        assert run("codim", "--n", "4", "--lambda", "2,2", "--time-cap", "0")[0] == 2
        assert run("codim", "--n", "4", "--lambda", "2,2", "--threads", "0")[0] == 2


class TestVerify:
    SUITE = [
        {"claim": "main1", "params": {"n": 4, "l": 1, "frontier": [[2, 2]]}},
        {"claim": "codimension", "params": {"n": 4, "l": 1, "lambda": [4]}, "expect": "fail"},
    ]

    def write(self, tmp_path, data):
        path = tmp_path / "suite.json"
        path.write_text(json.dumps(data))
        return str(path)

    def test_suite_file(self, tmp_path):
        code, text = run("verify", self.write(tmp_path, self.SUITE))
        rows = [json.loads(line) for line in text.splitlines()]
        assert code == 0 and [r["outcome"] for r in rows] == ["pass", "xfail"]

    def test_report_and_csv(self, tmp_path):
        rep, csv_path = tmp_path / "r.jsonl", tmp_path / "r.csv"
        code, text = run("verify", self.write(tmp_path, self.SUITE), "--report", str(rep),
                         "--csv", str(csv_path))
        assert code == 0 and text == ""
        assert len(rep.read_text().splitlines()) == 2
        assert csv_path.read_text().startswith("claim,params,status,witness,seconds\n")

    def test_threads_same_output(self, tmp_path, monkeypatch):
        path = self.write(tmp_path, self.SUITE)
        one = run("verify", path)[1]
        monkeypatch.setenv("SPECHT_GB_THREADS", "2")
        assert run("verify", path)[1] == one

    def test_failing_claim(self, tmp_path):
        data = [{"claim": "m_le_2", "params": {"n": 4, "l": 1, "lambda": [2, 2], "m": 3}}]
        assert run("verify", self.write(tmp_path, data))[0] == 1

    def test_empty_suite(self, tmp_path):
        assert run("verify", self.write(tmp_path, [])) == (0, "")

    def test_unknown_claim(self, tmp_path):
        assert run("verify", self.write(tmp_path, [{"claim": "nope"}]))[0] == 2

    def test_needs_input(self):
        assert run("verify")[0] == 2

    def test_default_small(self):
        code, text = run("verify", "--default", "--max-weight", "3")
        assert code == 0 and len(text.splitlines()) > 5


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["stab"], out=io.StringIO())
    assert exc.value.code == 2
