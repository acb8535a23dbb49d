import random

import pytest


@pytest.fixture
def rng():
    return random.Random(987123)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print one pass/fail line per acceptance criterion after the run."""
    reports = []
    for key in ("passed", "failed", "error"):
        reports.extend(terminalreporter.stats.get(key, []))
    acc = [
        r
        for r in reports
        if "test_acceptance" in r.nodeid and getattr(r, "when", "call") == "call"
    ]
    if not acc:
        return
    terminalreporter.section("acceptance criteria")
    for r in sorted(acc, key=lambda r: r.nodeid):
        word = "PASS" if r.passed else "FAIL"
        terminalreporter.write_line(f"{word}  {r.nodeid.split('::')[-1]}")
