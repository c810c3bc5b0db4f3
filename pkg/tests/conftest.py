"""Shared fixtures and the acceptance summary hook."""

from __future__ import annotations

import pytest

from mujam.fixture import hand_lexicon
from mujam.lexicon import Lexicon


@pytest.fixture
def fixture_lexicon() -> Lexicon:
    return hand_lexicon()


# ----------------------------------------------------------------------
# One summary line per acceptance criterion at the end of the run
# ----------------------------------------------------------------------

_ACCEPTANCE: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.skipped:
        _ACCEPTANCE[name] = "SKIP"
    elif report.when == "call":
        _ACCEPTANCE[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _ACCEPTANCE.items():
        terminalreporter.write_line(f"{outcome}: {name}")
