import pytest

ACCEPTANCE_LINES: list = []


@pytest.fixture(scope="session")
def acceptance_log():
    """Collector for per-criterion result lines, echoed after the run."""
    def record(line: str):
        print(line)
        ACCEPTANCE_LINES.append(line)
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance checklist (harness)")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
