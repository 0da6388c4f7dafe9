import pytest
from hypothesis import strategies as st

from cleangraphs.graph_core import Graph, build_graph

# (criterion, passed, detail) lines, printed in the terminal summary
ACCEPTANCE_LINES = []


def pytest_addoption(parser):
    parser.addoption(
        "--sweep7", action="store_true", default=False, help="run the n = 7 exhaustive sweep"
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--sweep7"):
        return
    skip = pytest.mark.skip(reason="needs --sweep7")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")


@st.composite
def graphs(draw, min_n=0, max_n=8, p=None):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return build_graph(n, [e for e, k in zip(pairs, keep) if k])


def cycle_edges(n):
    return [(i, (i + 1) % n) for i in range(n)]


@pytest.fixture
def c4() -> Graph:
    return build_graph(4, cycle_edges(4))


@pytest.fixture
def c5() -> Graph:
    return build_graph(5, cycle_edges(5))


@pytest.fixture
def c6() -> Graph:
    return build_graph(6, cycle_edges(6))
