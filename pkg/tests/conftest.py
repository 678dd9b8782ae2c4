import pytest

from charkit import QuadraticCorpus, build_a

import _acceptance_report


def pytest_terminal_summary(terminalreporter):
    if _acceptance_report.LINES:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_report.LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def corpus():
    return QuadraticCorpus.load_default()


@pytest.fixture(scope="session")
def assembled(corpus):
    """(a_dict, operator, bootstrap character table), built once."""
    return build_a(corpus)


@pytest.fixture(scope="session")
def operator(assembled):
    return assembled[1]


@pytest.fixture(scope="session")
def table(assembled):
    """The shared character table; tests that mutate state make their own."""
    return assembled[2]
