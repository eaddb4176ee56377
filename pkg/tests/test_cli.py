#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./tests/test_cli.py

import json

import pytest
from click.testing import CliRunner

from prolim.src.main import EXIT_CONFIG, EXIT_FAILED, EXIT_OK, cli
from prolim.src.suites.config import SuiteConfig
from prolim.src.suites.formatter import emit_report
from prolim.src.suites.runner import SuiteReport, SuiteRunner, run_tower
from prolim.src.verify.report import EXPECT_FAIL, CheckReport, check


def _write_config(tmp_path, data, name="config.json"):
    path = tmp_path / name
    path.write_text(json.dumps(data), encoding="utf-8")
    return path


def _run(tmp_path, data, *args, env=None):
    config = _write_config(tmp_path, data)
    out = tmp_path / "report.out"
    result = CliRunner().invoke(cli, ["--config", str(config), "--out", str(out), *args], env=env)
    return result, out


def test_prop21_report_passes(tmp_path):
    result, out = _run(tmp_path, {"p": 3, "d": 1, "M": 3, "suites": ["prop21"]})
    assert result.exit_code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["summary"] == {
        "total": "3", "passed": "3", "failed": "0", "expected_failures": "0", "unexpected": "0",
    }
    assert [c["name"] for c in report["checks"]] == ["prop21.level1", "prop21.level2", "prop21.level3"]
    assert report["config"]["towers"] == [{"p": "3", "d": "1", "M": "3", "pi": "0"}]


def test_empty_suites_give_empty_report(tmp_path):
    result, out = _run(tmp_path, {"p": 2, "M": 1, "suites": []})
    assert result.exit_code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert report["checks"] == []
    assert report["summary"]["total"] == "0"


def test_expected_failures_do_not_fail_the_run(tmp_path):
    data = {"p": 2, "M": 2, "suites": ["nakayama", "xa"], "digits": [[1, 1]], "seed": 3, "random_cases": 1}
    result, out = _run(tmp_path, data)
    assert result.exit_code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    names = [c["name"] for c in report["checks"]]
    assert names == [
        "xa.config0", "xa.random0",
        "nakayama.free1", "nakayama.trivial", "nakayama.mod_p", "nakayama.varpi_ideal",
    ]
    varpi = report["checks"][5]
    assert varpi["passed"] is False and varpi["expected"] == "fail"
    assert varpi["witness"]["kernel"] == ["2"]
    assert report["summary"]["expected_failures"] == "1"
    assert report["summary"]["unexpected"] == "0"


@pytest.mark.parametrize("data", [
    {"p": 2, "M": 2, "schedule": [0, 2, 2], "suites": ["prop21"]},
    {"p": 2, "M": 1, "suites": ["prop22"]},
    {"p": 2, "M": 1, "suites": ["kappa"]},
])
def test_config_errors_exit_2(tmp_path, data):
    result, out = _run(tmp_path, data)
    assert result.exit_code == EXIT_CONFIG
    assert not out.exists()


def test_unreadable_config_exits_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    result = CliRunner().invoke(cli, ["--config", str(bad)])
    assert result.exit_code == EXIT_CONFIG
    result = CliRunner().invoke(cli, ["--config", str(tmp_path / "missing.json")])
    assert result.exit_code == EXIT_CONFIG


def test_group_order_cap_precedence(tmp_path):
    data = {"p": 2, "M": 3, "suites": ["prop21"], "max_group_order": 8}
    result, _ = _run(tmp_path, data)
    assert result.exit_code == EXIT_OK
    result, _ = _run(tmp_path, data, env={"PROLIM_MAX_ORDER": "4"})
    assert result.exit_code == EXIT_CONFIG
    result, _ = _run(tmp_path, data, "--max-group-order", "16", env={"PROLIM_MAX_ORDER": "4"})
    assert result.exit_code == EXIT_OK


def test_suite_flag_overrides_config(tmp_path):
    result, out = _run(tmp_path, {"p": 2, "M": 1, "suites": ["prop21"], "seed": 1}, "--suite", "fsscan")
    assert result.exit_code == EXIT_OK
    report = json.loads(out.read_text(encoding="utf-8"))
    assert all(c["name"].startswith("fsscan.") for c in report["checks"])


def test_reports_are_byte_identical(tmp_path):
    data = {"p": 3, "M": 2, "suites": ["xa", "kappa", "torpm", "fsscan"], "seed": 5, "random_cases": 2}
    first, out_first = _run(tmp_path, data)
    payload = out_first.read_bytes()
    second, out_second = _run(tmp_path, data)
    assert first.exit_code == second.exit_code
    assert out_second.read_bytes() == payload


def test_text_format(tmp_path):
    result, out = _run(tmp_path, {"p": 2, "M": 1, "suites": ["nakayama"]}, "--format", "text")
    assert result.exit_code == EXIT_OK
    lines = out.read_text(encoding="utf-8").splitlines()
    assert lines[0].startswith("PASS nakayama.free1 ")
    assert lines[3].startswith("FAIL nakayama.varpi_ideal ")
    assert "expected=fail" in lines[3]
    assert lines[-1].startswith("SUMMARY ")
    assert "unexpected=0" in lines[-1]


def test_unexpected_failure_sets_exit_code():
    config = SuiteConfig.from_dict({"p": 2, "M": 1, "suites": []})
    failing = CheckReport.aggregate("demo", [check("leaf", False)])
    expected = CheckReport.aggregate("demo.negative", [check("leaf", False)], expected=EXPECT_FAIL)
    report = SuiteReport(config, [failing, expected])
    assert report.summary == {
        "total": 2, "passed": 0, "failed": 2, "expected_failures": 1, "unexpected": 1,
    }
    assert report.exit_code == EXIT_FAILED
    assert emit_report(report, "text").decode("utf-8").splitlines()[-1] == (
        "SUMMARY expected_failures=1 failed=2 passed=0 total=2 unexpected=1"
    )


def test_suite_exceptions_become_error_checks(monkeypatch):
    from prolim.src.suites import builtin

    def explode(self, tower, tower_index):
        raise RuntimeError("boom")

    monkeypatch.setattr(builtin.Prop21Suite, "run", explode)
    config = SuiteConfig.from_dict({"p": 2, "M": 1, "suites": ["prop21"]})
    runner = SuiteRunner(config)
    tower = runner.build_towers()[0]
    checks = run_tower(config, tower, 0)
    assert [c.name for c in checks] == ["prop21.error"]
    assert checks[0].witness == {"error": "RuntimeError", "message": "boom"}
