import json

import pandas as pd
import pytest

from gtsij.acceptance import (
    SUITES,
    AcceptanceResult,
    SuiteResult,
    construction_cases,
    corrupt_images,
    engine_counterexample,
    run_acceptance,
    run_suite,
    save_report,
)
from gtsij.catalog import CATALOG
from gtsij.config import RunConfig
from gtsij.core.sijection import cod
from gtsij.core.statistics import check_compatibility
from gtsij.core.verify import verify_sijection
from gtsij.patterns.constructions import pi
from gtsij.patterns.gt import eta_row_statistic


def test_engine_counterexample():
    assert engine_counterexample() == (cod((1, 2)), cod((2, 1)))


def test_quick_cases_cover_the_catalog():
    names = {name for name, _ in construction_cases("quick", RunConfig())}
    assert names == set(CATALOG)


def test_corrupted_pi_stays_valid_but_breaks_rows():
    phi = pi((1, 3, 5), 1)
    statistic = eta_row_statistic((1, 3, 5))
    broken = corrupt_images(phi, statistic)
    assert verify_sijection(broken).valid
    assert not check_compatibility(broken, statistic, eta_row_statistic((3, 1, 5))).compatible


def test_suite_result_keeps_first_witness():
    result = SuiteResult("demo")
    assert result.check(True, "a")
    assert not result.check(False, "b")
    result.check(False, "c")
    assert (result.cases, result.failures, result.witness) == (3, 2, "b")
    assert not result.passed


@pytest.mark.parametrize("name", ["engine", "asm", "integrability", "ggt", "transfer"])
def test_quick_suites_pass(name):
    result = run_suite(name, "quick", RunConfig())
    assert result.passed, result.witness
    assert result.cases > 0


def test_negative_control_fails_compatibility():
    result = run_suite("compatibility", "quick", RunConfig(), corrupt_pi=True)
    assert not result.passed
    assert result.witness.startswith("pi(")


def test_run_acceptance_lines():
    result = run_acceptance("quick", suites=["engine", "asm", "integrability"])
    assert [s.suite for s in result.suites] == ["engine", "asm", "integrability"]
    assert result.passed
    assert result.lines()[-1] == "quick: all suites passed"
    assert result.lines()[0].startswith("PASS engine: ")


def test_run_acceptance_rejects_unknown_names():
    with pytest.raises(ValueError):
        run_acceptance("medium")
    with pytest.raises(ValueError):
        run_acceptance("quick", suites=["engine", "speed"])


@pytest.mark.parametrize("report_format", ["csv", "json"])
def test_report_files(tmp_path, report_format):
    config = RunConfig(report_dir=str(tmp_path), report_format=report_format)
    run_acceptance("quick", config, suites=["integrability"])
    path = tmp_path / f"acceptance_quick.{report_format}"
    if report_format == "csv":
        frame = pd.read_csv(path)
        assert list(frame.columns) == ["suite", "cases", "failures", "seconds", "witness"]
        assert frame["suite"].tolist() == ["integrability"]
    else:
        records = json.loads(path.read_text())
        assert records[0]["suite"] == "integrability"
        assert records[0]["failures"] == 0


def test_save_report_format_check(tmp_path):
    result = AcceptanceResult("quick", [SuiteResult("engine")])
    with pytest.raises(ValueError):
        save_report(result, tmp_path / "report.xml", "xml")


def test_full_quick_run():
    result = run_acceptance("quick")
    assert [s.suite for s in result.suites] == list(SUITES)
    assert result.passed, [s.witness for s in result.suites if not s.passed]
