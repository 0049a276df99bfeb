import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from circlearea.interval import Interval  # noqa: E402


def P(x):
    return Interval(x, x)


@pytest.fixture
def point():
    return P


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion."""
    marker = request.node.get_closest_marker("criterion")
    yield
    if marker is None:
        return
    name = marker.args[0]
    callspec = getattr(request.node, "callspec", None)
    if callspec is not None:
        name += f" [{callspec.id}]"
    rep = getattr(request.node, "rep_call", None)
    status = "PASS" if rep is not None and rep.passed else "FAIL"
    line = f"[{status}] criterion {name}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion id")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
