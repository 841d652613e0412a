from fractions import Fraction

import pytest

from dct import corpus
from dct.simplicial import Cochain

# S¹₃ edges in the order the worked examples list them
S1_EDGES = ((0, 1), (1, 2), (0, 2))


def s1_cochain(K, values, coefficients="V", **kw):
    """A 1-cochain on S¹₃ from values listed on ([0,1],[1,2],[0,2])."""
    return Cochain.from_dict(K, 1, dict(zip(S1_EDGES, values)), coefficients, **kw)


def s1_values(c):
    return tuple(c[e] for e in S1_EDGES)


def F(text):
    return Fraction(text)


@pytest.fixture
def circle():
    return corpus.circle3()


@pytest.fixture
def sphere():
    return corpus.sphere_tetra()


@pytest.fixture
def rp2():
    return corpus.rp2_6()


@pytest.fixture
def torus():
    return corpus.torus7()


# filled by test_acceptance.py, echoed after the run
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
