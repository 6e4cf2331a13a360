import pytest

_LINES: list[str] = []


@pytest.fixture
def report():
    """Record a one-line verdict for the end-of-run summary."""
    def add(line: str):
        print(line)
        _LINES.append(line)
    return add


def pytest_terminal_summary(terminalreporter):
    if _LINES:
        terminalreporter.section("acceptance criteria")
        for line in _LINES:
            terminalreporter.write_line(line)
