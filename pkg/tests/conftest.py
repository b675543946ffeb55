from hypothesis import strategies as st

from graphcurve.graphio import GALLERY, gallery
from graphcurve.multigraph import Multigraph

TRIVALENT_2EC = ["theta", "k4", "sodacan", "prism", "doublehouse", "cube", "petersen"]

ACCEPTANCE_RESULTS = []


def graph(name):
    return gallery(name).graph


def gallery_graphs(names=None):
    return [(name, gallery(name).graph) for name in (names or GALLERY)]


@st.composite
def multigraphs(draw, min_n=1, max_n=7, max_m=12, loops=True):
    n = draw(st.integers(min_n, max_n))
    pair = st.tuples(st.integers(1, n), st.integers(1, n))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1]) if n > 1 else st.nothing()
    edges = draw(st.lists(pair, max_size=max_m)) if n > 1 or loops else []
    return Multigraph(n, tuple(edges))


@st.composite
def connected_multigraphs(draw, max_n=7, extra_edges=6, loops=True):
    """Random spanning tree plus random extra edges."""
    n = draw(st.integers(1, max_n))
    edges = [(draw(st.integers(1, v - 1)), v) for v in range(2, n + 1)]
    pair = st.tuples(st.integers(1, n), st.integers(1, n))
    if not loops:
        pair = pair.filter(lambda p: p[0] != p[1])
    if n > 1 or loops:
        edges += draw(st.lists(pair, max_size=extra_edges))
    order = draw(st.permutations(range(len(edges))))
    return Multigraph(n, tuple(edges[i] for i in order))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
