import networkx as nx
import pytest
from hypothesis import settings, strategies as st

from eccentra.graph import Graph

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


@st.composite
def graphs(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    slots = [(i, j) for j in range(1, n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    return Graph.from_edges(n, [e for e, b in zip(slots, bits) if b])


@st.composite
def connected_graphs(draw, n_min=2, n_max=8):
    """A random spanning tree plus random extra edges."""
    n = draw(st.integers(n_min, n_max))
    edges = set()
    for v in range(1, n):
        edges.add((draw(st.integers(0, v - 1)), v))
    slots = [(i, j) for j in range(1, n) for i in range(j)]
    extra = draw(st.lists(st.booleans(), min_size=len(slots), max_size=len(slots)))
    edges |= {e for e, b in zip(slots, extra) if b}
    return Graph.from_edges(n, edges)


@pytest.fixture(scope="session")
def nx_atlas_connected():
    """Connected graphs on 2..7 vertices from the networkx atlas (one per iso class)."""
    return [from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() >= 2 and nx.is_connected(h)]


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE: dict[int, str] = {}


def report_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
