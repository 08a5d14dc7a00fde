import pytest

# (criterion, ok, seconds, detail) rows filled in by test_acceptance.py
ACCEPTANCE_ROWS = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_ROWS


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_ROWS:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, secs, detail in sorted(ACCEPTANCE_ROWS, key=lambda r: r[0]):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}  ({secs:.1f}s)  {detail}")
