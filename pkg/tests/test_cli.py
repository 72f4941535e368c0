import json
import logging

import pytest

import gtsij.acceptance
from gtsij.acceptance import AcceptanceResult, SuiteResult
from gtsij.cli import EXIT_BUDGET, EXIT_FAILURE, EXIT_OK, EXIT_USAGE, main, parse_ints, parse_profile, parse_x
from gtsij.config import BUDGET_ENV_VAR
from gtsij.errors import ParseError


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(BUDGET_ENV_VAR, raising=False)


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out.splitlines()


def test_parsers():
    assert parse_ints("1,3, 5") == (1, 3, 5)
    assert parse_ints("-1 2") == (-1, 2)
    assert parse_profile("1/1,3") == ((1,), (1, 3))
    assert parse_x("auto") is None
    assert parse_x("-4") == -4
    with pytest.raises(ParseError):
        parse_ints("1,a")
    with pytest.raises(ParseError):
        parse_x("far")


def test_gt_size(capsys):
    assert run(capsys, "gt", "size", "--k", "1,3,5") == (EXIT_OK, ["8"])
    assert run(capsys, "gt", "size", "--k", "3,1") == (EXIT_OK, ["-2"])


def test_json_output(capsys):
    code, lines = run(capsys, "--format", "json", "gt", "size", "--k", "1,3")
    assert code == EXIT_OK
    assert json.loads(lines[0]) == {"formula": 2, "minus": 0, "plus": 2, "size": 2}
    code, lines = run(capsys, "gt", "size", "--k", "1,3", "--format", "json")
    assert json.loads(lines[0])["size"] == 2


def test_exit_codes(capsys):
    assert run(capsys, "gt", "size", "--k", "0,17,40", "--budget", "5")[0] == EXIT_BUDGET
    assert run(capsys, "gt", "size", "--k", "1,x")[0] == EXIT_USAGE
    assert run(capsys)[0] == EXIT_USAGE
    assert run(capsys, "gt", "weigh", "--k", "1")[0] == EXIT_USAGE
    assert run(capsys, "sij", "verify", "--name", "pi", "--k", "1,3,5")[0] == EXIT_USAGE


def test_budget_refusal_logged_once(capsys, caplog):
    caplog.set_level(logging.ERROR)
    assert run(capsys, "gt", "size", "--k", "0,17,40", "--budget", "5")[0] == EXIT_BUDGET
    errors = [record for record in caplog.records if record.levelno >= logging.ERROR]
    assert len(errors) == 1
    assert "over budget 5" in errors[0].getMessage()


def test_gt_enumerate_and_restrict(capsys):
    code, lines = run(capsys, "gt", "enumerate", "--k", "1,3")
    assert code == EXIT_OK
    assert lines == ["+ 1 / 1,3", "+ 2 / 1,3"]
    code, lines = run(capsys, "gt", "restrict", "--k", "1,3,5", "--profile", "1/1,3/1,3,5")
    assert (code, lines) == (EXIT_OK, ["1 / 1,3 / 1,3,5: 1"])


def test_ggt_size(capsys, tmp_path):
    params = tmp_path / "params.txt"
    params.write_text("1 1 2 1\n")
    assert run(capsys, "ggt", "size", "--k", "1,3", "--params", str(params)) == (EXIT_OK, ["-2"])


def test_asm_commands(capsys, tmp_path):
    code, lines = run(capsys, "asm", "enumerate", "--n", "3")
    assert code == EXIT_OK
    assert len(lines) == 7
    assert "1 0 0; 0 1 0; 0 0 1" in lines
    matrix = tmp_path / "asm.txt"
    matrix.write_text("0 0 1 0\n1 0 -1 1\n0 0 1 0\n0 1 0 0\n")
    assert run(capsys, "asm", "to-mt", "--file", str(matrix)) == (EXIT_OK, ["3 / 1,5 / 1,4,6 / 1,3,5,7"])
    assert run(capsys, "asm", "enumerate")[0] == EXIT_USAGE


def test_triangle_listings(capsys):
    code, lines = run(capsys, "mt", "enumerate", "--k", "1,3,5")
    assert code == EXIT_OK and len(lines) == 7
    assert run(capsys, "gmt", "size", "--k", "1,3,5") == (EXIT_OK, ["7"])
    assert run(capsys, "sgt", "size", "--k", "1,3,5") == (EXIT_OK, ["7"])
    assert run(capsys, "gmt", "size", "--k", "0", "--mode", "af") == (EXIT_OK, ["3"])
    code, lines = run(capsys, "gmt", "enumerate", "--k", "0")
    assert lines == ["+ 0 | NW", "+ 0 | NE", "- 0 | NWNE"]


def test_inversions(capsys, tmp_path):
    matrix = tmp_path / "asm.txt"
    matrix.write_text("0 0 1 0\n1 0 -1 1\n0 1 0 0\n0 0 1 0\n")
    assert run(capsys, "inv", "--kind", "asm", "--in", str(matrix)) == (EXIT_OK, ["2"])

    triangle = tmp_path / "mt.txt"
    triangle.write_text("(tup (tup 2 (tup 2)) (tup 1 4))\n")
    assert run(capsys, "inv", "--kind", "mt", "--k", "1,3,5", "--in", str(triangle)) == (EXIT_OK, ["1"])
    assert run(capsys, "inv", "--kind", "mt", "--k", "2,4,6", "--in", str(triangle))[0] == EXIT_USAGE

    shifted = tmp_path / "sgt.txt"
    shifted.write_text("(tup (tup 2 (tup 2)) (tup SW))\n")
    assert run(capsys, "inv", "--kind", "sgt", "--k", "0,3", "--in", str(shifted)) == (EXIT_OK, ["1"])
    assert run(capsys, "inv", "--kind", "sgt", "--in", str(shifted))[0] == EXIT_USAGE


def test_sij_verify_and_graph(capsys):
    args = ["--name", "interval_split", "--a", "1", "--b", "2", "--c", "3"]
    assert run(capsys, "sij", "verify", *args) == (EXIT_OK, ["valid; compatible: normal"])
    code, lines = run(capsys, "sij", "graph", *args)
    assert code == EXIT_OK
    assert "domain:1 -- codomain:(tag 0 1)" in lines
    assert "codomain:(tag 1 2) -- codomain:(tag 0 2)" in lines
    code, lines = run(capsys, "--format", "dot", "sij", "graph", *args)
    assert lines[0] == "graph interval_split {"


def test_gamma_commands(capsys, tmp_path):
    assert run(capsys, "gamma", "verify", "--k", "0,2", "--x", "auto") == (EXIT_OK, ["valid; compatible: eta_top, eta_inv"])
    code, lines = run(capsys, "gamma", "apply", "--k", "5")
    assert code == EXIT_OK
    assert lines == [
        "domain:(tup NW) -> codomain:(tup 5 unit)",
        "domain:(tup NE) -> domain:(tup NWNE)",
        "domain:(tup NWNE) -> domain:(tup NE)",
    ]
    items = tmp_path / "items.txt"
    items.write_text("# one element\ncodomain (tup 5 unit)\n")
    code, lines = run(capsys, "gamma", "apply", "--k", "5", "--in", str(items))
    assert lines == ["codomain:(tup 5 unit) -> domain:(tup NW)"]


def test_weighted(capsys):
    assert run(capsys, "weighted", "sum", "--side", "both", "--k", "0") == (EXIT_OK, ["equal"])
    code, lines = run(capsys, "weighted", "sum", "--side", "gmt", "--k", "0")
    assert lines == ["1 w", "1 v X1^-1", "1 u X1^1"]


def test_config_file_sets_format(capsys, tmp_path):
    path = tmp_path / "run.yml"
    path.write_text("run:\n  output_format: json\n")
    code, lines = run(capsys, "--config", str(path), "gt", "size", "--k", "1,3,5")
    assert json.loads(lines[0])["size"] == 8


def test_acceptance_command(capsys, tmp_path, monkeypatch):
    seen = {}

    def fake_run(level, config):
        seen["level"], seen["report_dir"] = level, config.report_dir
        return AcceptanceResult(level, [SuiteResult("engine", cases=3)])

    monkeypatch.setattr(gtsij.acceptance, "run_acceptance", fake_run)
    code, lines = run(capsys, "acceptance", "--level", "full", "--report-dir", str(tmp_path))
    assert code == EXIT_OK
    assert seen == {"level": "full", "report_dir": str(tmp_path)}
    assert lines[-1] == "full: all suites passed"

    def failing_run(level, config):
        return AcceptanceResult(level, [SuiteResult("engine", cases=3, failures=1, witness="x")])

    monkeypatch.setattr(gtsij.acceptance, "run_acceptance", failing_run)
    assert run(capsys, "acceptance")[0] == EXIT_FAILURE
