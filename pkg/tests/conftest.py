import pytest
from hypothesis import strategies as st

from sspcert import INF, Graph

G1_ARCS = [(0, 1, 5), (0, 2, 2), (2, 1, -4), (1, 3, 1), (2, 3, 10)]
G1_DIST = [0, -2, 2, -1]

# n=3, only cycle 1->2->1 with weight -2
NEG_ARCS = [(0, 1, 1), (1, 2, -2), (2, 1, 0)]


@pytest.fixture
def g1():
    return Graph(4, G1_ARCS)


@pytest.fixture
def neg3():
    return Graph(3, NEG_ARCS)


@st.composite
def graphs(draw, max_n=7, max_m=14, wmin=-6, wmax=6):
    n = draw(st.integers(1, max_n))
    arcs = draw(
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1), st.integers(wmin, wmax)),
            max_size=max_m,
        )
    )
    return Graph(n, arcs)


@st.composite
def graphs_with_source(draw, **kw):
    g = draw(graphs(**kw))
    return g, draw(st.integers(0, g.n - 1))


def labels(n, lo=-8, hi=8):
    return st.lists(st.one_of(st.integers(lo, hi), st.just(INF)), min_size=n, max_size=n)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
