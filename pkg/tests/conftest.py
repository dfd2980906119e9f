import itertools
import math

import pytest


def all_compositions(n, length=None):
    """Independent composition enumerator: choose cut points in 1..n-1."""
    for k in range(n):
        for cuts in itertools.combinations(range(1, n), k):
            bounds = (0,) + cuts + (n,)
            parts = tuple(b - a for a, b in zip(bounds, bounds[1:]))
            if length is None or len(parts) == length:
                yield parts


def brute_xi(n):
    return max(t ** (n - t) for t in range(1, n + 1))


def brute_alpha(n):
    best = brute_xi(n)
    return max(t for t in range(1, n + 1) if t ** (n - t) == best)


@pytest.fixture
def compositions_of():
    return all_compositions


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
