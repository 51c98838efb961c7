import networkx as nx
import numpy as np
import pytest

from strongprod import UndirectedGraph
from strongprod.cycle_orient import cycle_graph
from strongprod.generators import complete_graph, path_graph, petersen_graph


def from_nx(g: nx.Graph) -> UndirectedGraph:
    mapping = {v: i for i, v in enumerate(sorted(g.nodes))}
    return UndirectedGraph(len(mapping), ((mapping[u], mapping[v]) for u, v in g.edges))


def to_nx(g) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.vertex_count))
    out.add_edges_from(g.edges())
    return out


def digraph_to_nx(d) -> nx.DiGraph:
    out = nx.DiGraph()
    out.add_nodes_from(range(d.vertex_count))
    out.add_edges_from(d.arcs())
    return out


def floyd_warshall(g) -> np.ndarray:
    """Plain O(n^3) all-pairs distances, independent of any BFS code."""
    n = g.vertex_count
    d = np.full((n, n), np.inf)
    np.fill_diagonal(d, 0)
    arcs = g.arcs() if hasattr(g, "arcs") else g.edges() + [(v, u) for u, v in g.edges()]
    for u, v in arcs:
        d[u, v] = 1
    for k in range(n):
        d = np.minimum(d, d[:, k, None] + d[None, k, :])
    return d


@pytest.fixture
def P():
    return path_graph


@pytest.fixture
def C():
    return cycle_graph


@pytest.fixture
def K():
    return complete_graph


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
