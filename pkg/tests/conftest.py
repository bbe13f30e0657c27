from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import strategies as st

from clawtrace.generators import random_graph
from clawtrace.graph import Graph, build_graph, is_connected

ACCEPTANCE_LINES: list[str] = []


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 8, connected: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for j in range(n) for i in range(j)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = build_graph(n, [e for e, b in zip(pairs, bits) if b])
    if connected and not is_connected(g):
        # join consecutive components by an edge so every draw is usable
        from clawtrace.graph import component_masks
        comps = [(m & -m).bit_length() - 1 for m in component_masks(g)]
        g = build_graph(n, g.edges() + list(zip(comps, comps[1:])))
    return g


def seeded_connected(n: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    while True:
        g = random_graph(n, p, rng)
        if is_connected(g):
            return g


@pytest.fixture
def acceptance():
    def record(line: str) -> None:
        print(line)
        ACCEPTANCE_LINES.append(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
