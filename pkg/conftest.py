# conftest.py

import logging

import networkx as nx
import pytest

from core.plane_graph import build_from_drawing

logging.getLogger().handlers.clear()
logging.basicConfig(level=logging.ERROR)


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full small-order sweeps; deselect with -m \"not slow\"")


# ─── Straight-line drawings ────────────────────────────────────────────────
DRAWINGS = {
    "k3": (
        {1: (0, 0), 2: (10, 0), 3: (5, 8)},
        [(1, 2), (2, 3), (3, 1)],
    ),
    "k4": (
        {1: (0, 0), 2: (10, 0), 3: (5, 9), 4: (5, 3)},
        [(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)],
    ),
    "cube": (
        {1: (0, 0), 2: (10, 0), 3: (10, 10), 4: (0, 10),
         5: (3, 3), 6: (7, 3), 7: (7, 7), 8: (3, 7)},
        [(1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 7), (7, 8), (8, 5),
         (1, 5), (2, 6), (3, 7), (4, 8)],
    ),
    "c5": (
        {1: (0, 10), 2: (9, 3), 3: (6, -8), 4: (-6, -8), 5: (-9, 3)},
        [(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)],
    ),
    "p3": (
        {1: (0, 0), 2: (5, 0), 3: (10, 0)},
        [(1, 2), (2, 3)],
    ),
    # two triangles joined by an edge: triangle distance 1
    "bowtie_bar": (
        {1: (0, 0), 2: (4, -3), 3: (4, 3), 4: (10, 0), 5: (14, -3), 6: (14, 3)},
        [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)],
    ),
    # triangle 4 5 6 separates the hub 7 from the outer triangle 1 2 3
    "nested": (
        {1: (-20, -20), 2: (20, -20), 3: (0, 24), 4: (-8, -6), 5: (8, -6), 6: (0, 10), 7: (0, 0)},
        [(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4), (1, 4), (2, 5), (3, 6),
         (4, 7), (5, 7), (6, 7)],
    ),
    # two triangles sharing vertex 3: triangle distance 0
    "bowtie": (
        {1: (0, -3), 2: (0, 3), 3: (5, 0), 4: (10, -3), 5: (10, 3)},
        [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)],
    ),
}


def drawn(name):
    coords, edges = DRAWINGS[name]
    return build_from_drawing(coords, edges)


@pytest.fixture
def k3():
    return drawn("k3")


@pytest.fixture
def k4():
    return drawn("k4")


@pytest.fixture
def cube():
    return drawn("cube")


@pytest.fixture
def c5():
    return drawn("c5")


@pytest.fixture
def p3():
    return drawn("p3")


@pytest.fixture
def drawing():
    return drawn


def nx_cycle_count(graph, length):
    """Independent oracle: number of simple cycles of exactly `length`"""
    g = graph.to_networkx()
    return sum(1 for c in nx.simple_cycles(g, length_bound=length) if len(c) == length)
