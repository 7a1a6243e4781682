import itertools

import pytest

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def partite_edges(n, r):
    return list(itertools.product(range(1, n + 1), repeat=r))


def subset_edges(n, r):
    return list(itertools.combinations(range(1, n + 1), r))


def nested(symbols, member):
    """Plain recursive evaluation of p1 s1 (p2 s2 (...)), independent of the package."""
    if not symbols:
        return member(1)
    head = member(1)
    rest = nested(symbols[1:], lambda j: member(j + 1))
    return (head and rest) if symbols[0] == "&" else (head or rest)


@pytest.fixture
def rng():
    import random

    return random.Random(1234)
