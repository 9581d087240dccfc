import pytest

LINES: list[str] = []


@pytest.fixture
def verdict():
    """Record one acceptance line; the test still asserts on `ok`."""
    def record(name: str, ok: bool, info: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'} {name}" + (f": {info}" if info else "")
        LINES.append(line)
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
