import pytest
from hypothesis import settings
from hypothesis import strategies as st

from qcliques import build_graph

# wall-clock deadlines are noise on shared CI boxes; example counts are
# pinned per test instead
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@pytest.fixture
def triangle():
    return build_graph(3, [(0, 1), (1, 2), (0, 2)])


@pytest.fixture
def path3():
    return build_graph(3, [(0, 1), (1, 2)])


@pytest.fixture
def five_cycle():
    return build_graph(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])


@pytest.fixture
def k4():
    return build_graph(4, [(a, b) for a in range(4) for b in range(a + 1, 4)])


@pytest.fixture
def star5():
    # center 0, leaves 1..5
    return build_graph(6, [(0, leaf) for leaf in range(1, 6)])


@st.composite
def graphs(draw, min_n=0, max_n=10):
    """Small random graphs for property tests."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    if n < 2:
        return build_graph(n, [])
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
        lambda t: t[0] != t[1]
    )
    edges = draw(st.lists(pair, max_size=3 * n))
    return build_graph(n, edges)


@st.composite
def graph_with_edges(draw, min_n=2, max_n=10):
    """Random graphs guaranteed to carry at least one edge."""
    n = draw(st.integers(min_value=max(2, min_n), max_value=max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(
        lambda t: t[0] != t[1]
    )
    edges = draw(st.lists(pair, min_size=1, max_size=3 * n))
    return build_graph(n, edges)
