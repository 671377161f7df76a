# corpus/sketch.py

import logging
import random

import networkx as nx

from core.plane_graph import build_from_drawing
from utils import config
from utils.errors import TooLarge

logger = logging.getLogger("planelab.corpus")


def grid_sketch(rows, cols, rng, keep=0.8, diagonal=0.25):
    """Largest component of a random straight-line subgraph of a rows x cols lattice"""
    g = nx.Graph()
    for r in range(rows):
        for c in range(cols):
            g.add_node((r, c))
            if c + 1 < cols and rng.random() < keep:
                g.add_edge((r, c), (r, c + 1))
            if r + 1 < rows and rng.random() < keep:
                g.add_edge((r, c), (r + 1, c))
            # one diagonal per square at most
            if r + 1 < rows and c + 1 < cols and rng.random() < diagonal:
                if rng.random() < 0.5:
                    g.add_edge((r, c), (r + 1, c + 1))
                else:
                    g.add_edge((r, c + 1), (r + 1, c))

    part = max(nx.connected_components(g), key=lambda s: (len(s), sorted(s)))
    if len(part) < 3:
        return None
    ids = {p: i for i, p in enumerate(sorted(part), 1)}
    coords = {ids[(r, c)]: (float(c), float(-r)) for r, c in part}
    edges = [(ids[a], ids[b]) for a, b in g.subgraph(part).edges()]
    return build_from_drawing(coords, edges)


def sketches(count, max_side=8, seed=None):
    """Deterministic stream of connected plane graphs on at most max_side**2 vertices"""
    if max_side < 2 or max_side * max_side > config.PLANAR_CODE_LIMIT:
        raise TooLarge(f"lattice side {max_side} outside 2..{int(config.PLANAR_CODE_LIMIT ** 0.5)}")
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    made = 0
    while made < count:
        g = grid_sketch(rng.randint(2, max_side), rng.randint(2, max_side), rng)
        if g is not None:
            made += 1
            yield g
    logger.info("sketched: %d", made)
