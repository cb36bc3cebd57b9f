import random

import networkx as nx
import pytest

from chordbip.chordality import random_chordal_bipartite
from chordbip.graph import Graph, parse_graph6
from chordbip.search import bipartite_classes, chordal_bipartite_classes


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_bipartite(rng: random.Random, n: int) -> Graph:
    p = rng.randint(3, n - 3)
    dens = rng.uniform(0.15, 0.8)
    return Graph.from_edges(n, [(a, b) for a in range(p) for b in range(p, n)
                                if rng.random() < dens])


def random_cb_corpus(count: int = 1000, seed: int = 2024) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(4, 16)
        target = rng.randint(n - 1, min(2 * n, (n // 2) * (n - n // 2)))
        out.append(random_chordal_bipartite(n, target, i))
    return out


@pytest.fixture(scope="session")
def bipartite_corpus() -> dict[int, list[Graph]]:
    """All connected bipartite classes with 2 <= n <= 7."""
    return {n: [parse_graph6(s) for s in bipartite_classes(n)] for n in range(2, 8)}


@pytest.fixture(scope="session")
def cb_corpus() -> list[Graph]:
    """All connected chordal bipartite classes with 2 <= n <= 8."""
    return [parse_graph6(s) for n in range(2, 9) for s in chordal_bipartite_classes(n)]


@pytest.fixture(scope="session")
def random_cb() -> list[Graph]:
    return random_cb_corpus()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
