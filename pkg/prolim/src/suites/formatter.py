#!/usr/bin/env python
# -*- coding: utf-8 -*-
# ./prolim/src/suites/formatter.py

import json

from prolim.src.errors import ConfigError
from prolim.src.suites.runner import SuiteReport
from prolim.src.verify.report import EXPECT_FAIL, CheckReport, canonical


def _text_value(value) -> str:
    value = canonical(value)
    if isinstance(value, str):
        return value
    return json.dumps(value, sort_keys=True, separators=(",", ":"))


def _text_line(check: CheckReport) -> str:
    status = "PASS" if check.passed else "FAIL"
    params = dict(check.params)
    if check.expected == EXPECT_FAIL:
        params["expected"] = "fail"
    parts = [status, check.name] + [f"{k}={_text_value(params[k])}" for k in sorted(params)]
    return " ".join(parts)


def emit_report(report: SuiteReport, fmt: str = "json") -> bytes:
    """
    Canonical serialisation: sorted keys, checks in run order, integers as
    decimal strings. The text form has one line per top-level check and a
    closing summary line.
    """
    if fmt == "json":
        text = json.dumps(report.as_dict(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    elif fmt == "text":
        lines = [_text_line(c) for c in report.checks]
        summary = report.summary
        lines.append("SUMMARY " + " ".join(f"{k}={summary[k]}" for k in sorted(summary)))
        text = "\n".join(lines) + "\n"
    else:
        raise ConfigError(f"Unknown report format: {fmt}")
    return text.encode("utf-8")
