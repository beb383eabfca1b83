import pytest

from digraph_ricci.families import directed_cycle, oriented_complete


def from_label(i):
    """1-based vertex label from hand-written matrices -> 0-based vertex."""
    return i - 1


@pytest.fixture(scope="session")
def C5():
    return directed_cycle(5)


@pytest.fixture(scope="session")
def K5():
    return oriented_complete(5)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
