import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from linspect.graph import from_edge_list  # noqa: E402

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance line: call with (label, passed, detail)."""

    def record(label: str, passed: bool, detail: str = "") -> None:
        _ACCEPTANCE.append((label, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")


@pytest.fixture
def paw():
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (2, 3)])


@pytest.fixture
def diamond():
    return from_edge_list(4, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3)])


@pytest.fixture
def bowtie():
    return from_edge_list(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])
