# corpus/enumerate.py

import logging
from functools import lru_cache
from itertools import chain, combinations

import networkx as nx

from core.plane_graph import build_from_rotation
from utils import config
from utils.errors import TooLarge

logger = logging.getLogger("planelab.corpus")


def _edge_bound(n):
    return 3 * n - 6 if n >= 3 else n - 1


def _bucket_key(g):
    return g.number_of_edges(), nx.weisfeiler_lehman_graph_hash(g, iterations=3)


@lru_cache(maxsize=None)
def _universe(n):
    """Connected planar graphs on nodes 0..n-1, one per isomorphism class"""
    if n == 1:
        g = nx.Graph()
        g.add_node(0)
        return (g,)

    new = n - 1
    bound = _edge_bound(n)
    buckets = {}
    found = []
    for base in _universe(n - 1):
        room = bound - base.number_of_edges()
        for size in range(1, min(room, n - 1) + 1):
            for attach in combinations(range(n - 1), size):
                g = base.copy()
                g.add_edges_from((new, v) for v in attach)
                if not nx.check_planarity(g)[0]:
                    continue
                bucket = buckets.setdefault(_bucket_key(g), [])
                if any(nx.is_isomorphic(g, h) for h in bucket):
                    continue
                bucket.append(g)
                found.append(g)
    logger.info("universe n=%d: %d graphs", n, len(found))
    return tuple(found)


def embed(g):
    """PlaneGraph on 1..n from a networkx planar graph labelled 0..n-1"""
    n = g.number_of_nodes()
    if n == 1:
        return build_from_rotation(1, {1: ()})
    _, emb = nx.check_planarity(g)
    rotation = {v + 1: tuple(w + 1 for w in reversed(list(emb.neighbors_cw_order(v)))) for v in g}
    return build_from_rotation(n, rotation)


def enumerate_small(n):
    """Every connected planar graph on exactly n vertices up to isomorphism, embedded"""
    if n > config.SMALL_GRAPH_LIMIT:
        raise TooLarge(f"enumeration stops at {config.SMALL_GRAPH_LIMIT} vertices, asked for {n}")
    if n < 1:
        return
    for g in _universe(n):
        yield embed(g)


def enumerate_up_to(n):
    return chain.from_iterable(enumerate_small(k) for k in range(1, n + 1))
