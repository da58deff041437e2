import pytest

from hrlab.factor_oracle import factor_small
from hrlab.sieve import sieve_range, stats_through

ORACLE_LIMIT = 2**20


@pytest.fixture(scope="session")
def oracle_table():
    """Brute-force factorizations of every n in [1, 2**20], index n - 1."""
    return [factor_small(n) for n in range(1, ORACLE_LIMIT + 1)]


@pytest.fixture(scope="session")
def stats_1e6():
    return sieve_range(1, 10**6)


@pytest.fixture(scope="session")
def stats_1e8():
    return stats_through(10**8)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
