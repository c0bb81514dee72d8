"""Shared graph builders and fixture loading for the test suite."""

from pathlib import Path

from tmlab import Graph, parse_graph

FIXTURES = Path(__file__).resolve().parent.parent / "graphs"


def load(name) -> Graph:
    return parse_graph((FIXTURES / f"{name}.txt").read_text())


def path_graph(k) -> Graph:
    return Graph(k, tuple((i, i + 1) for i in range(k - 1)))


def cycle_graph(k) -> Graph:
    return Graph(k, tuple((i, (i + 1) % k) for i in range(k)))


def complete_bipartite(a, b) -> Graph:
    return Graph(a + b, tuple((i, a + j) for i in range(a) for j in range(b)))


def star_graph(leaves) -> Graph:
    return Graph(leaves + 1, tuple((0, i) for i in range(1, leaves + 1)))


def nx_to_graph(T) -> Graph:
    nodes = sorted(T.nodes())
    relabel = {v: i for i, v in enumerate(nodes)}
    return Graph(len(nodes), tuple((relabel[u], relabel[v]) for u, v in T.edges()))


def to_nx(g: Graph):
    import networkx as nx

    T = nx.Graph()
    T.add_nodes_from(range(g.n))
    T.add_edges_from(g.edges)
    return T


def all_trees(max_n):
    """All non-isomorphic trees with 1 <= n <= max_n, as Graph values."""
    import networkx as nx

    out = [Graph(1)]
    for n in range(2, max_n + 1):
        out.extend(nx_to_graph(T) for T in nx.nonisomorphic_trees(n))
    return out
