import pytest

from partition_strata.graph import build_graph
from partition_strata.runner import stratify_many

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def graphs():
    return {n: build_graph(n) for n in range(1, 31)}


@pytest.fixture(scope="session")
def cross_checked():
    """Cross-checked stratifications for n <= 30 (raises on any oracle disagreement)."""
    return stratify_many(range(1, 31), "cross-check")


@pytest.fixture(scope="session")
def strata():
    return stratify_many(range(1, 31), "capacity")


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        label = report.nodeid.split("::")[-1]
        ACCEPTANCE[label] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in ACCEPTANCE.items():
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {label}")
