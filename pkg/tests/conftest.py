"""Per-criterion PASS/FAIL summary for the acceptance tests."""
from __future__ import annotations

from collections import defaultdict

import pytest

_TITLES = {
    1: "main theorems vs oracle",
    2: "Cigler determinants",
    3: "consecutive-Catalan identity",
    4: "H-fraction lemmas",
    5: "NextABC conjectured streams",
    6: "determinant reconstruction",
    7: "beta as a Lucas polynomial",
    8: "R/S relations",
    9: "randomized transform checks",
    10: "Fibonacci/Lucas closed forms",
    11: "odd-case quadratic",
    12: "expand/eval round trip",
}

_criterion_of: dict[str, int] = {}
_outcomes: dict[int, list[str]] = defaultdict(list)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion covered by a test")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _criterion_of[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    n = _criterion_of.get(report.nodeid)
    if n is None:
        return
    if report.when == "call" or report.failed:
        _outcomes[n].append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for n in sorted(_TITLES):
        got = _outcomes.get(n)
        if not got:
            verdict = "NOT RUN"
        elif all(o == "passed" for o in got):
            verdict = "PASS"
        else:
            verdict = "FAIL"
        tr.write_line(f"criterion {n:2d} ({_TITLES[n]}): {verdict}")
