import pytest

from colourhopf import QParams

_CRITERIA = []


@pytest.fixture
def p():
    return QParams(0.5)


@pytest.fixture
def criterion():
    """Record a one-line verdict for an acceptance criterion and print it."""
    def record(number, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
        _CRITERIA.append((number, line))
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_CRITERIA):
        terminalreporter.write_line(line)
