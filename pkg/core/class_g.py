# core/class_g.py

import math
from dataclasses import dataclass

import networkx as nx

from core.plane_graph import PlaneGraph, adjacency_of, cycles_up_to
from utils import config


@dataclass
class MembershipReport:
    is_member: bool
    has_5_cycle: bool
    triangle_distance: float
    five_cycle_count: int = 0
    five_cycles: tuple = ()
    closest_triangles: tuple | None = None
    triangle_count: int = 0

    def to_lines(self):
        verdict = "yes" if self.is_member else "no"
        lines = [
            f"MEMBER {verdict} five_cycles={self.five_cycle_count} "
            f"triangles={self.triangle_count} "
            f"triangle_distance={format_distance(self.triangle_distance)}"
        ]
        lines += [f"WITNESS 5-cycle {c}" for c in self.five_cycles]
        if self.closest_triangles:
            a, b = self.closest_triangles
            lines.append(
                f"WITNESS triangles {a} | {b} distance={format_distance(self.triangle_distance)}"
            )
        return lines


def format_distance(d):
    return "inf" if d == math.inf else str(int(d))


def as_networkx(graph):
    if isinstance(graph, PlaneGraph):
        return graph.to_networkx()
    if isinstance(graph, nx.Graph):
        return graph
    g = nx.Graph()
    for v, ws in adjacency_of(graph).items():
        g.add_node(v)
        g.add_edges_from((v, w) for w in ws)
    return g


def triangles(graph):
    return cycles_up_to(graph, 3)


def closest_triangle_pair(graph, tris=None):
    """(distance, (t1, t2)) over distinct triangles, or (inf, None) when fewer than two"""
    tris = triangles(graph) if tris is None else tris
    if len(tris) < 2:
        return math.inf, None
    g = as_networkx(graph)
    best, pair = math.inf, None
    for i, t in enumerate(tris):
        dist = nx.multi_source_dijkstra_path_length(g, set(t.vertices))
        for other in tris[i + 1:]:
            d = min((dist[v] for v in other.vertices if v in dist), default=math.inf)
            if d < best:
                best, pair = d, (t, other)
                if best == 0:
                    return best, pair
    return best, pair


def triangle_distance(graph):
    return closest_triangle_pair(graph)[0]


def check_membership(graph, cap=None):
    """Class membership: no 5-cycle and pairwise vertex-disjoint triangles"""
    cap = config.WITNESS_CAP if cap is None else cap
    fives = [c for c in cycles_up_to(graph, 5) if c.length == 5]
    tris = triangles(graph)
    distance, pair = closest_triangle_pair(graph, tris)
    return MembershipReport(
        is_member=not fives and distance >= 1,
        has_5_cycle=bool(fives),
        triangle_distance=distance,
        five_cycle_count=len(fives),
        five_cycles=tuple(fives[:cap]),
        closest_triangles=pair,
        triangle_count=len(tris),
    )


def is_member(graph):
    return check_membership(graph, cap=0).is_member
