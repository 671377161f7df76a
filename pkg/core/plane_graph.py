# core/plane_graph.py

import math
from collections import deque
from collections.abc import Mapping
from dataclasses import dataclass

import networkx as nx

from utils import config
from utils.errors import (
    BadOuterEdge,
    Disconnected,
    EulerViolation,
    NotACycle,
    NotIndependent,
    NotSimple,
    Overlap,
)


def node_key(v):
    """Sort key that orders plain ids before merged labels like '3(7)'"""
    if isinstance(v, int):
        return (0, v, "")
    return (1, 0, str(v))


def adjacency_of(graph):
    """Adjacency map for a PlaneGraph, a networkx graph or a plain mapping"""
    if isinstance(graph, PlaneGraph):
        return graph.adjacency
    if isinstance(graph, nx.Graph):
        return {v: frozenset(graph[v]) for v in graph.nodes}
    return {v: frozenset(ws) for v, ws in graph.items()}


# ─── Records ───────────────────────────────────────────────────────────────
@dataclass(frozen=True)
class FaceRecord:
    id: int
    boundary: tuple
    is_outer: bool = False

    @property
    def degree(self):
        return len(self.boundary)

    @property
    def vertices(self):
        return frozenset(self.boundary)

    @property
    def is_cycle(self):
        """True when the boundary walk visits no vertex twice"""
        return self.degree >= 3 and len(self.vertices) == self.degree

    def darts(self):
        b = self.boundary
        return [(b[i], b[(i + 1) % len(b)]) for i in range(len(b))]


@dataclass(frozen=True)
class Cycle:
    vertices: tuple

    @classmethod
    def canonical(cls, seq):
        seq = tuple(seq)
        i = min(range(len(seq)), key=lambda j: node_key(seq[j]))
        forward = seq[i:] + seq[:i]
        backward = (forward[0],) + tuple(reversed(forward[1:]))
        if node_key(backward[1]) < node_key(forward[1]):
            return cls(backward)
        return cls(forward)

    @property
    def length(self):
        return len(self.vertices)

    def edges(self):
        vs = self.vertices
        return {frozenset((vs[i], vs[(i + 1) % len(vs)])) for i in range(len(vs))}

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def __str__(self):
        return " ".join(str(v) for v in self.vertices)


# ─── PlaneGraph ────────────────────────────────────────────────────────────
class PlaneGraph:
    """Connected simple plane graph held as a rotation system with traced faces"""

    def __init__(self, rotation, outer_edge, faces, face_of):
        self._rotation = rotation
        self.outer_edge = outer_edge
        self.faces = faces
        self._face_of = face_of
        self.adjacency = {v: frozenset(ws) for v, ws in rotation.items()}
        self.edge_count = sum(len(ws) for ws in rotation.values()) // 2
        self._faces_at = {}
        for f in faces:
            for v in f.vertices:
                self._faces_at.setdefault(v, set()).add(f.id)

    @property
    def vertex_count(self):
        return len(self._rotation)

    def vertices(self):
        return range(1, self.vertex_count + 1)

    def rotation(self, v):
        return self._rotation[v]

    def neighbors(self, v):
        return self.adjacency[v]

    def degree(self, v):
        return len(self._rotation[v])

    def has_edge(self, u, v):
        return v in self.adjacency.get(u, ())

    def edges(self):
        return [(u, w) for u in self.vertices() for w in sorted(self._rotation[u]) if u < w]

    def darts(self):
        return [(u, w) for u in self.vertices() for w in self._rotation[u]]

    def face(self, face_id):
        return self.faces[face_id]

    def face_of(self, u, v):
        """Id of the face to the left of dart (u, v)"""
        return self._face_of[(u, v)]

    @property
    def outer_face(self):
        return next(f for f in self.faces if f.is_outer)

    def inner_faces(self):
        return [f for f in self.faces if not f.is_outer]

    def faces_at(self, v):
        return tuple(sorted(self._faces_at.get(v, ())))

    def on_triangle(self, v):
        ns = sorted(self.adjacency[v])
        return any(ns[j] in self.adjacency[ns[i]] for i in range(len(ns)) for j in range(i + 1, len(ns)))

    def outer_cycle(self):
        """The outer boundary as a Cycle, or None when the walk repeats a vertex"""
        outer = self.outer_face
        return Cycle.canonical(outer.boundary) if outer.is_cycle else None

    def to_networkx(self):
        g = nx.Graph()
        g.add_nodes_from(self.vertices())
        g.add_edges_from(self.edges())
        return g

    def rotation_lists(self):
        return {v: tuple(self._rotation[v]) for v in self.vertices()}

    def __eq__(self, other):
        if not isinstance(other, PlaneGraph):
            return NotImplemented
        return self._rotation == other._rotation and self.outer_edge == other.outer_edge

    def __hash__(self):
        return hash((tuple(sorted(self._rotation.items())), self.outer_edge))

    def __repr__(self):
        return f"PlaneGraph(n={self.vertex_count}, m={self.edge_count}, faces={len(self.faces)})"


# ─── Construction ──────────────────────────────────────────────────────────
def _normalize_rotation(n, rotation):
    if isinstance(rotation, Mapping):
        items = {int(v): tuple(int(w) for w in ws) for v, ws in rotation.items()}
    else:
        items = {i + 1: tuple(int(w) for w in ws) for i, ws in enumerate(rotation)}

    for v in items:
        if not 1 <= v <= n:
            raise NotSimple(f"vertex {v} out of range 1..{n}")
    rot = {v: items.get(v, ()) for v in range(1, n + 1)}

    for v, ws in rot.items():
        if len(set(ws)) != len(ws):
            raise NotSimple(f"vertex {v} repeats a neighbor in its rotation")
        for w in ws:
            if w == v:
                raise NotSimple(f"loop at vertex {v}")
            if not 1 <= w <= n:
                raise NotSimple(f"vertex {v} lists neighbor {w} out of range")
            if v not in rot.get(w, ()) and v not in items.get(w, ()):
                raise NotSimple(f"adjacency not symmetric: {v} lists {w} but not conversely")
    return rot


def _check_connected(rot):
    start = next(iter(rot))
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for w in rot[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != len(rot):
        raise Disconnected(f"{len(rot) - len(seen)} vertices unreachable from vertex {start}")


def _trace_faces(rot):
    """Trace boundary walks: dart (u, v) continues with (v, w), w preceding u at v"""
    position = {(v, w): i for v, ws in rot.items() for i, w in enumerate(ws)}
    face_of = {}
    walks = []
    for v in sorted(rot):
        for w in rot[v]:
            if (v, w) in face_of:
                continue
            walk = []
            dart = (v, w)
            while dart not in face_of:
                face_of[dart] = len(walks)
                walk.append(dart[0])
                a, b = dart
                ring = rot[b]
                dart = (b, ring[position[(b, a)] - 1])
            walks.append(tuple(walk))
    return walks, face_of


def build_from_rotation(n, rotation, outer_edge=None):
    """Validate a rotation system and return the PlaneGraph it describes"""
    if n < 1:
        raise NotSimple("a plane graph needs at least one vertex")
    rot = _normalize_rotation(n, rotation)
    _check_connected(rot)

    if n == 1:
        if rot[1]:
            raise NotSimple("single vertex with neighbors")
        return PlaneGraph(rot, None, (FaceRecord(0, (), True),), {})

    walks, face_of = _trace_faces(rot)
    edges = sum(len(ws) for ws in rot.values()) // 2
    if n - edges + len(walks) != 2:
        raise EulerViolation(
            f"V - E + F = {n} - {edges} + {len(walks)} != 2; rotation is not a sphere embedding"
        )

    if outer_edge is None:
        outer_edge = (1, rot[1][0])
    outer_edge = (int(outer_edge[0]), int(outer_edge[1]))
    if outer_edge not in face_of:
        raise BadOuterEdge(f"{outer_edge} is not a directed edge of the graph")

    outer_id = face_of[outer_edge]
    faces = tuple(FaceRecord(i, walk, i == outer_id) for i, walk in enumerate(walks))
    assert sum(f.degree for f in faces) == 2 * edges
    return PlaneGraph(rot, outer_edge, faces, face_of)


def build_from_drawing(coords, edges):
    """Build from a straight-line drawing; outer face is the one traced clockwise"""
    n = len(coords)
    neighbours = {v: [] for v in range(1, n + 1)}
    for u, v in edges:
        neighbours[u].append(v)
        neighbours[v].append(u)

    def angle(v, w):
        (x0, y0), (x1, y1) = coords[v], coords[w]
        return math.atan2(y1 - y0, x1 - x0)

    rot = {v: tuple(sorted(ws, key=lambda w: angle(v, w))) for v, ws in neighbours.items()}
    if n == 1:
        return build_from_rotation(1, rot)

    walks, _ = _trace_faces(rot)

    def signed_area(walk):
        total = 0.0
        for i, v in enumerate(walk):
            (x0, y0), (x1, y1) = coords[v], coords[walk[(i + 1) % len(walk)]]
            total += x0 * y1 - x1 * y0
        return total / 2

    outer = min(walks, key=signed_area)
    return build_from_rotation(n, rot, (outer[0], outer[1 % len(outer)]))


# ─── Cycles ────────────────────────────────────────────────────────────────
def cycles_up_to(graph, max_length):
    """Every cycle of length 3..max_length, once, in canonical form"""
    if not 3 <= max_length <= config.MAX_CYCLE_LENGTH:
        raise ValueError(f"cycle length bound must lie in 3..{config.MAX_CYCLE_LENGTH}")
    adj = adjacency_of(graph)
    order = sorted(adj, key=node_key)
    rank = {v: i for i, v in enumerate(order)}
    found = []

    for start in order:
        low = rank[start]
        path = [start]
        on_path = {start}

        def extend():
            last = path[-1]
            for w in sorted(adj[last], key=rank.__getitem__):
                if w == start:
                    if len(path) >= 3 and rank[path[1]] < rank[path[-1]]:
                        found.append(Cycle(tuple(path)))
                elif rank[w] > low and w not in on_path and len(path) < max_length:
                    path.append(w)
                    on_path.add(w)
                    extend()
                    on_path.discard(path.pop())

        extend()

    found.sort(key=lambda c: (c.length, [rank[v] for v in c.vertices]))
    return found


def as_cycle(graph, cycle):
    vs = tuple(cycle.vertices if isinstance(cycle, Cycle) else cycle)
    if len(vs) < 3 or len(set(vs)) != len(vs):
        raise NotACycle(f"{vs} is not a simple vertex cycle")
    for i, v in enumerate(vs):
        w = vs[(i + 1) % len(vs)]
        if not graph.has_edge(v, w):
            raise NotACycle(f"{v} and {w} are not adjacent")
    return Cycle.canonical(vs)


def cycle_sides(graph, cycle):
    """(interior, exterior) vertex sets of a cycle; the outer face marks the exterior"""
    c = as_cycle(graph, cycle)
    on_cycle = set(c.vertices)
    cut = c.edges()

    outer = graph.outer_face.id
    reached = {outer}
    queue = deque([outer])
    while queue:
        f = graph.face(queue.popleft())
        for a, b in f.darts():
            if frozenset((a, b)) in cut:
                continue
            g = graph.face_of(b, a)
            if g not in reached:
                reached.add(g)
                queue.append(g)

    exterior = set()
    for fid in reached:
        exterior.update(graph.face(fid).vertices)
    exterior -= on_cycle
    interior = set(graph.vertices()) - on_cycle - exterior
    return frozenset(interior), frozenset(exterior)


def is_separating(graph, cycle):
    interior, exterior = cycle_sides(graph, cycle)
    return bool(interior) and bool(exterior)


# ─── Surgery & measures ────────────────────────────────────────────────────
def merged_label(part):
    part = sorted(part, key=node_key)
    if len(part) == 1:
        return part[0]
    return f"{part[0]}({','.join(str(v) for v in part[1:])})"


def identify_vertices(graph, parts):
    """Abstract graph G[S1,...,Sl]: each part collapses to one vertex x(y)"""
    adj = adjacency_of(graph)
    label_of = {}
    merged = {}
    for part in parts:
        part = list(part)
        if not part:
            raise Overlap("empty part")
        for v in part:
            if v not in adj:
                raise NotIndependent(f"vertex {v} is not in the graph")
            if v in label_of:
                raise Overlap(f"vertex {v} appears in two parts")
        for i, v in enumerate(part):
            for w in part[i + 1:]:
                if w in adj[v]:
                    raise NotIndependent(f"part {sorted(part, key=node_key)} contains edge {v}-{w}")
        label = merged_label(part)
        merged[label] = tuple(sorted(part, key=node_key))
        for v in part:
            label_of[v] = label

    result = nx.Graph()
    for v in sorted(adj, key=node_key):
        result.add_node(label_of.get(v, v))
    for v in adj:
        for w in adj[v]:
            result.add_edge(label_of.get(v, v), label_of.get(w, w))
    result.graph["merged"] = merged
    return result


def sigma(graph):
    if isinstance(graph, PlaneGraph):
        return graph.vertex_count + graph.edge_count
    if isinstance(graph, nx.Graph):
        return graph.number_of_nodes() + graph.number_of_edges()
    adj = adjacency_of(graph)
    return len(adj) + sum(len(ws) for ws in adj.values()) // 2


def reroot(graph, face):
    """Same rotation system with `face` (id or FaceRecord) as the outer face"""
    face = graph.face(face) if isinstance(face, int) else face
    if not face.boundary:
        return graph
    b = face.boundary
    return build_from_rotation(graph.vertex_count, graph.rotation_lists(), (b[0], b[1 % len(b)]))


def facial_cycle(graph, length):
    """First face, by id, whose boundary is a simple cycle of the given length"""
    return next((f for f in graph.faces if f.degree == length and f.is_cycle), None)
