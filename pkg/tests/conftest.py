import os
import sys

import pytest

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)


@pytest.fixture
def fixture_path():
    def path(name):
        return os.path.join(HERE, "fixtures", name)
    return path


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        k = int(report.nodeid.rsplit("_", 1)[1])
        _acceptance[k] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    from test_acceptance import TITLES
    terminalreporter.section("acceptance criteria")
    for k in sorted(TITLES):
        if k in _acceptance:
            verdict = "PASS" if _acceptance[k] else "FAIL"
        else:
            verdict = "NOT RUN"
        terminalreporter.write_line("criterion %d: %s  %s" % (k, verdict, TITLES[k]))
