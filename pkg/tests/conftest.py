"""Acceptance reporting: one PASS/FAIL line per criterion in the terminal summary.

Tests opt in with ``@pytest.mark.criterion("label")``; a criterion passes
when every test carrying its label passes.  The whole-suite wall-clock budget
is checked here as well, since no single test can observe it.
"""
import time

import pytest

SUITE_BUDGET_SECONDS = 120.0

_results = {}
_labels = {}
_start = [None]


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion covered by the test")


def pytest_sessionstart(session):
    _start[0] = time.perf_counter()


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _labels[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    label = _labels.get(report.nodeid)
    if label is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _results.setdefault(label, []).append(report.outcome == "passed")


def _elapsed():
    return time.perf_counter() - _start[0]


def pytest_sessionfinish(session, exitstatus):
    if _results and _elapsed() > SUITE_BUDGET_SECONDS and session.exitstatus == 0:
        session.exitstatus = pytest.ExitCode.TESTS_FAILED


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for label, outcomes in _results.items():
        ok = bool(outcomes) and all(outcomes)
        tr.write_line(f"[{'PASS' if ok else 'FAIL'}] {label}")
    elapsed = _elapsed()
    ok = elapsed <= SUITE_BUDGET_SECONDS
    tr.write_line(
        f"[{'PASS' if ok else 'FAIL'}] full test suite wall-clock {elapsed:.1f} s "
        f"(budget {SUITE_BUDGET_SECONDS:.0f} s)"
    )
