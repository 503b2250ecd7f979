import pytest

from hbim.exact_ref import Medium

_ACCEPTANCE = []


@pytest.fixture
def unit_medium():
    return Medium(1.0, 1.0, 1.0)


@pytest.fixture
def steel():
    return Medium(45.0, 7850.0, 460.0)


@pytest.fixture
def criterion():
    """Record one acceptance line; printed in the terminal summary."""

    def record(label, passed, detail=""):
        _ACCEPTANCE.append((label, bool(passed), detail))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {label}  {detail}")
