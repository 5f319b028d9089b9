import io
import json

import pytest

from kecs.cli import ExitStatus, run
from kecs.genio import read_graph, read_reports, write_reports
from tests.fixtures import FIGURE1_EDGE_LIST, K33_EDGE_LIST, LOOP_EDGE_LIST


def invoke(*argv: str) -> tuple[ExitStatus, str]:
    stdout = io.StringIO()
    status = run([str(arg) for arg in argv], stdout=stdout)
    return status, stdout.getvalue()


def records(output: str) -> list[dict]:
    return [json.loads(line) for line in output.splitlines()]


class TestSolve:
    def test_text_output(self):
        status, output = invoke("solve", "-i", K33_EDGE_LIST, "-k", 2, "--method", "flow")
        assert status is ExitStatus.OK
        assert output.splitlines()[0] == "nu=6"
        assert "color 1:" in output

    def test_json_output(self):
        status, output = invoke("solve", "--json", "-g", "figure1", "-k", 2, "--method", "oracle")
        (record,) = records(output)
        assert status is ExitStatus.OK
        assert (record["nu"], record["method"], record["verified"]) == (5, "oracle", True)

    def test_odd_cycle_with_a_bipartite_method(self, capsys):
        status, _ = invoke("solve", "-i", FIGURE1_EDGE_LIST, "-k", 2)
        assert status is ExitStatus.INPUT_ERROR
        assert "--method oracle" in capsys.readouterr().err

    def test_malformed_file(self):
        status, _ = invoke("solve", "-i", LOOP_EDGE_LIST, "-k", 1)
        assert status is ExitStatus.INPUT_ERROR

    def test_cross_check(self):
        status, output = invoke("solve", "--cross-check", "-g", "k33", "-k", 1, "--method", "flow")
        assert status is ExitStatus.OK
        assert "method=flow" in output

    def test_budget(self):
        status, output = invoke("solve", "-g", "petersen", "-k", 3, "--method", "oracle", "--budget", 1)
        assert status is ExitStatus.BUDGET_EXHAUSTED
        assert "lower bound only" in output

    def test_certificate_round_trip(self, tmp_path):
        path = tmp_path / "k33.cert.json"
        assert invoke("solve", "-g", "k33", "-k", 2, "-o", path, "--seed", 3)[0] is ExitStatus.OK
        status, output = invoke("verify", "--certificate", path)
        assert status is ExitStatus.OK
        assert output.strip() == "certificate valid: nu_2=6 (augmenting)"

        tampered = json.loads(path.read_text(encoding="utf-8"))
        tampered["k"] = 1
        path.write_text(json.dumps(tampered), encoding="utf-8")
        status, output = invoke("verify", "--certificate", path)
        assert status is ExitStatus.VIOLATION
        assert "digest-mismatch" in output


class TestSpectrum:
    def test_json(self):
        status, output = invoke("spectrum", "--json", "-g", "cycle:5")
        (record,) = records(output)
        assert status is ExitStatus.OK
        assert record["spectrum"] == [0, 2, 4, 5]
        assert record["differences"] == [2, 2, 1]
        assert not record["bipartite"]

    def test_table(self):
        status, output = invoke("spectrum", "-i", K33_EDGE_LIST)
        assert status is ExitStatus.OK
        assert output.splitlines()[0] == "n=6 m=9 Δ=3 bipartite=yes"
        assert output.splitlines()[-1].split() == ["3", "9", "3"]


class TestVerify:
    def test_rules(self):
        status, output = invoke("verify", "-i", FIGURE1_EDGE_LIST, "--rules", "concavity", "--method", "oracle")
        assert status is ExitStatus.OK
        assert output.startswith("concavity")

    def test_named_rule_without_its_precondition(self):
        status, output = invoke("verify", "--json", "-g", "figure1", "--rules", "conj1")
        (record,) = records(output)
        assert status is ExitStatus.INPUT_ERROR
        assert (record["rule"], record["status"]) == ("conj1", "precondition")

    def test_precondition_next_to_a_checked_rule(self):
        status, output = invoke("verify", "--json", "-g", "figure1", "--rules", "conj1,concavity")
        assert status is ExitStatus.OK
        assert [(record["rule"], record["status"]) for record in records(output)][0] == ("conj1", "precondition")
        assert records(output)[1]["rule"] == "concavity"

    def test_all_skips_quietly(self):
        status, output = invoke("verify", "--json", "-g", "figure1")
        assert status is ExitStatus.OK
        assert all(record["status"] != "precondition" for record in records(output))

    def test_unknown_rule(self):
        assert invoke("verify", "-g", "k33", "--rules", "convexity")[0] is ExitStatus.INPUT_ERROR

    def test_report_and_replay(self, tmp_path):
        path = tmp_path / "c5.report.jsonl"
        status, _ = invoke("verify", "-g", "cycle:5", "--rules", "conj1,concavity", "-o", path)
        assert status is ExitStatus.OK
        assert [record["rule"] for record in read_reports(path)] == ["conj1", "concavity"]
        status, output = invoke("verify", "--json", "--replay", path)
        assert status is ExitStatus.OK
        assert all(record["verdict"] == record["stored_verdict"] for record in records(output))

    def test_replay_mismatch(self, tmp_path):
        path = tmp_path / "k33.report.jsonl"
        invoke("verify", "-g", "k33", "--rules", "concavity", "-o", path)
        stored = read_reports(path)
        stored[0]["verdict"] = "holds"
        write_reports(path, stored)
        status, output = invoke("verify", "--replay", path)
        assert status is ExitStatus.VIOLATION
        assert "differs from the stored verdict" in output


class TestSearch:
    def test_exhaustive(self):
        status, output = invoke("search", "--json", "--class", "bipartite", "--max-n", 4, "--rules", "midpoint")
        summary = records(output)[-1]
        assert status is ExitStatus.OK
        assert summary["summary"]
        assert (summary["graphs"], summary["failures"]) == (34, 0)

    def test_sampled_output_file(self, tmp_path):
        path = tmp_path / "search.report.jsonl"
        argv = ["search", "--class", "nearly-bipartite", "--max-n", 6, "--samples", 5, "--seed", 1, "-o", path]
        status, output = invoke(*argv, "--rules", "conj1")
        assert status in (ExitStatus.OK, ExitStatus.VIOLATION)
        assert "graphs:          5" in output
        assert read_reports(path)[-1]["seed"] == 1

    def test_too_large_for_enumeration(self):
        assert invoke("search", "--class", "all", "--max-n", 9)[0] is ExitStatus.INPUT_ERROR


class TestGen:
    def test_file(self, tmp_path):
        path = tmp_path / "regular.el"
        argv = ["gen", "--model", "regular-bipartite", "--half-n", 3, "-k", 2, "--seed", 1, "-o", path]
        assert invoke(*argv)[0] is ExitStatus.OK
        assert path.read_text(encoding="utf-8").startswith("c kecs ")
        assert read_graph(path).is_regular(2)

    def test_stdout(self):
        status, output = invoke("gen", "--model", "named", "--name", "cycle:4")
        assert status is ExitStatus.OK
        assert "p el 4 4" in output.splitlines()

    def test_missing_parameter(self, capsys):
        assert invoke("gen", "--model", "random-bipartite", "--nu", 2)[0] is ExitStatus.INPUT_ERROR
        assert "--nw" in capsys.readouterr().err

    def test_seed_from_the_environment(self, monkeypatch):
        monkeypatch.setenv("KECS_SEED", "4")
        argv = ["gen", "--json", "--model", "random-multigraph", "--n", 5, "--p", 0.5]
        first, second = invoke(*argv)[1], invoke(*argv)[1]
        assert first == second
        assert records(first)[0]["seed"] == 4

    def test_bad_environment_seed(self, monkeypatch):
        monkeypatch.setenv("KECS_SEED", "four")
        assert invoke("gen", "--model", "named", "--name", "k4")[0] is ExitStatus.INPUT_ERROR


class TestSelfTest:
    def test_list(self):
        status, output = invoke("self-test", "--list")
        assert status is ExitStatus.OK
        assert [line.split()[0] for line in output.splitlines()][:2] == ["regular-spectrum", "midpoint"]

    def test_single_claim(self):
        status, output = invoke("self-test", "--only", "figure1")
        assert status is ExitStatus.OK
        assert "a-c-d-f" in output
        assert output.splitlines()[-1] == "1/1 claims passed"

    def test_injected_fault_is_caught(self):
        status, output = invoke("self-test", "--json", "--only", "cubic", "--inject-fault")
        claim, summary = records(output)
        assert status is ExitStatus.VIOLATION
        assert not claim["passed"]
        assert "petersen" in claim["detail"]
        assert summary["failed"] == 1

    def test_unknown_claim(self):
        assert invoke("self-test", "--only", "lemma6")[0] is ExitStatus.INPUT_ERROR


@pytest.mark.parametrize("argv", [[], ["solve"], ["solve", "-g", "k4"], ["frobnicate"], ["spectrum", "--bogus"]])
def test_usage_errors(argv):
    assert run(argv, stdout=io.StringIO()) is ExitStatus.INPUT_ERROR


def test_version(capsys):
    assert run(["--version"], stdout=io.StringIO()) is ExitStatus.OK
    assert capsys.readouterr().out.startswith("kecs ")
