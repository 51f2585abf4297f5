import itertools

import pytest

# filled in by tests/test_acceptance.py; echoed after the test report so the
# per-criterion verdicts survive pytest's output capture
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def brute_force_r8(m_max: int):
    """Counts of x in Z^8 with sum(x_i^2) = m, for m = 0..m_max.

    Independent oracle for theta1: plain box enumeration, no series math.
    """
    import math

    bound = math.isqrt(m_max)
    counts = [0] * (m_max + 1)
    vals = range(-bound, bound + 1)
    # Z^4 counts convolved with themselves: 9^4 work instead of 9^8
    quad = {}
    for x in itertools.product(vals, repeat=4):
        s = sum(v * v for v in x)
        if s <= m_max:
            quad[s] = quad.get(s, 0) + 1
    for s1, c1 in quad.items():
        for s2, c2 in quad.items():
            if s1 + s2 <= m_max:
                counts[s1 + s2] += c1 * c2
    return counts


@pytest.fixture(scope="session")
def r8_counts():
    return brute_force_r8(12)
