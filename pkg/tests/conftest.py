import pytest

# filled by test_acceptance.py; one line per criterion
CRITERIA: dict = {}


def record(n: int, ok: bool, detail: str = "") -> bool:
    CRITERIA[n] = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip()
    print(CRITERIA[n])
    return ok


@pytest.fixture
def criterion():
    return record


def pytest_terminal_summary(terminalreporter):
    if CRITERIA:
        terminalreporter.section("acceptance criteria")
        for n in sorted(CRITERIA):
            terminalreporter.write_line(CRITERIA[n])
