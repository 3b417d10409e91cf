from __future__ import annotations

import random
from itertools import combinations

import pytest

from ecpoly.census import connected_graphs
from ecpoly.graph import Graph, from_edge_list

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def random_isolated_free(rng: random.Random, n: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    p = rng.uniform(0.15, 0.6)
    while True:
        chosen = [e for e in pairs if rng.random() < p]
        g = from_edge_list(n, chosen)
        if not g.has_isolated_vertex():
            return g


def oracle_counts(g: Graph) -> list[int]:
    """e_i by testing every i-combination of edges; independent of the engines."""
    out = []
    everyone = set(range(g.n))
    for i in range(g.m + 1):
        c = 0
        for sub in combinations(g.edges, i):
            if {v for e in sub for v in e} == everyone:
                c += 1
        out.append(c)
    return out


@pytest.fixture(scope="session")
def small_connected() -> list[Graph]:
    """Every connected graph with 2 <= n <= 7, up to isomorphism."""
    out = []
    for n in range(2, 8):
        out.extend(connected_graphs(n))
    return out


@pytest.fixture(scope="session")
def random_corpus() -> list[Graph]:
    rng = random.Random(20261015)
    return [random_isolated_free(rng, rng.randint(8, 12)) for _ in range(200)]


@pytest.fixture(scope="session")
def corpus(small_connected, random_corpus) -> list[Graph]:
    return small_connected + random_corpus
