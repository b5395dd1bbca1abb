import pytest

RUNNING_EXAMPLE = (9, 3, 10, 7, 8, 2, 6, 1, 4, 5, 0)

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def running_example():
    return RUNNING_EXAMPLE


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
