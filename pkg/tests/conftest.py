import pytest

# filled by test_acceptance: criterion number -> (ok, line)
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n][1])


@pytest.fixture
def record():
    def _record(n: int, ok: bool, detail: str) -> None:
        line = f"{'PASS' if ok else 'FAIL'}  criterion {n:2d}: {detail}"
        ACCEPTANCE[n] = (ok, line)
        print(line)
        assert ok, line
    return _record
