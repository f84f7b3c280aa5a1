import pytest

CRITERIA: dict[int, str] = {}


@pytest.fixture
def record():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""

    def _record(number: int, ok: bool, detail: str):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        CRITERIA[number] = line
        print(line)
        assert ok, line

    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        terminalreporter.write_line(CRITERIA[n])
