# reducible/detectors.py

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from core.context import PlaneContext
from core.plane_graph import as_cycle, cycle_sides, cycles_up_to, identify_vertices, node_key
from core.class_g import check_membership
from utils.errors import GraphError, NotACycle

logger = logging.getLogger("planelab.reducible")


@dataclass(frozen=True)
class ConfigurationMatch:
    lemma_id: str
    key: tuple
    details: dict = field(default_factory=dict, compare=False, hash=False)

    def to_line(self):
        return f"MATCH {self.lemma_id} " + " ".join(str(k) for k in self.key)


@dataclass(frozen=True)
class Detector:
    lemma_id: str
    shape: str
    candidates: Callable
    describe: Callable
    constructive: bool = False


# ─── Helpers ───────────────────────────────────────────────────────────────
def _face(ctx, fid):
    if not isinstance(fid, int) or not 0 <= fid < len(ctx.graph.faces):
        return None
    return ctx.graph.face(fid)


def _small(ctx, fid, k):
    f = _face(ctx, fid)
    return f if f is not None and ctx.is_small(f) and f.degree == k else None


def _around(face, v):
    """Boundary read from v: (v, next, opposite, previous) on a 4-face"""
    b = face.boundary
    i = b.index(v)
    return tuple(b[(i + j) % len(b)] for j in range(len(b)))


def _disjoint(ctx, vertices):
    return not (set(vertices) & ctx.c0)


def special_links(ctx, v):
    """One (face id, linking 3-vertex) per pendant special face of v"""
    links, seen = [], set()
    for fid, x in ctx.pendant_links.get(v, ()):
        if fid in ctx.special and fid not in seen:
            seen.add(fid)
            links.append((fid, x))
    return links


def _vertices(ctx):
    return ((v,) for v in ctx.graph.vertices())


# ─── Prop 3.1 ──────────────────────────────────────────────────────────────
def _low_degree(ctx, key):
    (v,) = key
    if v not in ctx.c0 and ctx.degree(v) <= 2:
        return {"v": v}
    return None


def _two_triangles(ctx, key):
    (v,) = key
    threes = ctx.faces_at(v, 3)
    if len(threes) >= 2:
        return {"v": v, "faces": tuple(f.id for f in threes)}
    return None


def _adjacent_small_faces(ctx, key):
    f3, f4 = key
    tri, quad = _small(ctx, f3, 3), _small(ctx, f4, 4)
    if tri is None or quad is None:
        return None
    for a, b in tri.darts():
        if ctx.graph.face_of(b, a) == f4:
            return {"f3": f3, "f4": f4, "edge": (a, b)}
    return None


def _adjacent_small_candidates(ctx):
    for tri in ctx.small_faces(3):
        for a, b in tri.darts():
            quad = ctx.graph.face(ctx.graph.face_of(b, a))
            if ctx.is_small(quad) and quad.degree == 4:
                yield (tri.id, quad.id)


# ─── Separating cycles ─────────────────────────────────────────────────────
def _cycle(ctx, key, lengths):
    if len(key) not in lengths:
        return None
    try:
        c = as_cycle(ctx.graph, key)
    except NotACycle:
        return None
    return c if c.vertices == tuple(key) else None


def _sides(ctx, cycle):
    sides = ctx.cache.setdefault("sides", {})
    if cycle.vertices not in sides:
        sides[cycle.vertices] = cycle_sides(ctx.graph, cycle)
    return sides[cycle.vertices]


def _short_cycles(ctx):
    if "cycles" not in ctx.cache:
        ctx.cache["cycles"] = cycles_up_to(ctx.graph, 7) if ctx.graph.vertex_count >= 3 else []
    return ctx.cache["cycles"]


def _separating_triangle_or_heptagon(ctx, key):
    c = _cycle(ctx, key, (3, 7))
    if c is None:
        return None
    inside, outside = _sides(ctx, c)
    if inside and outside:
        return {"cycle": c.vertices, "interior": tuple(sorted(inside))}
    return None


def _separating_fours(ctx):
    if "sep4" not in ctx.cache:
        found = []
        for c in _short_cycles(ctx):
            if c.length == 4:
                inside, outside = _sides(ctx, c)
                if inside and outside:
                    found.append(c)
        ctx.cache["sep4"] = found
    return ctx.cache["sep4"]


def _bad_separating_four(ctx, key):
    c = _cycle(ctx, key, (4,))
    if c is None:
        return None
    inside, outside = _sides(ctx, c)
    if not (inside and outside):
        return None
    shaped = False
    if len(outside) == 2:
        b, d = sorted(outside)
        shaped = ctx.graph.has_edge(b, d) and any(
            ctx.graph.has_edge(v, b) and ctx.graph.has_edge(v, d) for v in c.vertices
        )
    others = len(_separating_fours(ctx)) - 1
    if shaped and not others:
        return None
    return {"cycle": c.vertices, "exterior": tuple(sorted(outside)), "others": others}


def _cycle_candidates(lengths):
    def candidates(ctx):
        return (c.vertices for c in _short_cycles(ctx) if c.length in lengths)

    return candidates


# ─── Outer cycle chords and 4-faces meeting C0 ─────────────────────────────
def _outer_edges(ctx):
    return {frozenset(d) for d in ctx.c0_face.darts()}


def _outer_chord(ctx, key):
    x, y = key
    if x not in ctx.c0 or y not in ctx.c0 or node_key(x) >= node_key(y):
        return None
    if frozenset((x, y)) in _outer_edges(ctx):
        return None
    common = (ctx.graph.neighbors(x) & ctx.graph.neighbors(y)) - ctx.c0
    if ctx.graph.has_edge(x, y) or common:
        return {"x": x, "y": y, "chord": ctx.graph.has_edge(x, y), "common": tuple(sorted(common))}
    return None


def _outer_pairs(ctx):
    return combinations(sorted(ctx.c0), 2)


def _four_face_on_c0(ctx, key):
    fid, v1 = key
    f = _small(ctx, fid, 4)
    if f is None or v1 not in f.vertices or v1 not in ctx.c0:
        return None
    v3 = _around(f, v1)[2]
    touching = len(ctx.graph.neighbors(v3) & ctx.c0)
    tag = ctx.tag(f)
    if (
        v3 in ctx.c0
        or (tag == "F4''" and touching != 1)
        or (tag == "F4'" and touching != 0)
    ):
        return {"f": fid, "v1": v1, "v3": v3, "tag": tag, "touching": touching}
    return None


def _four_faces_with_vertex(on_c0=False):
    def candidates(ctx):
        for f in ctx.small_faces(4):
            for v in f.boundary:
                if not on_c0 or v in ctx.c0:
                    yield (f.id, v)

    return candidates


# ─── Identification lemmas ─────────────────────────────────────────────────
def identification_roles(ctx, fid, u):
    """u v w x around a small 4-face with u, w opposite and not both on triangles"""
    f = _small(ctx, fid, 4)
    if f is None or u not in f.vertices:
        return None
    u, v, w, x = _around(f, u)
    if ctx.on_triangle(u) and ctx.on_triangle(w):
        return None
    if ctx.graph.has_edge(u, w):
        return None
    return {"f": fid, "u": u, "v": v, "w": w, "x": x}


def _identification_fails(ctx, key):
    fid, u = key
    roles = identification_roles(ctx, fid, u)
    if roles is None or node_key(roles["u"]) > node_key(roles["w"]):
        return None
    try:
        merged = identify_vertices(ctx.graph, [(roles["u"], roles["w"])])
    except GraphError:
        return None
    report = check_membership(merged)
    if report.is_member:
        return None
    return dict(roles, report=report)


def _four_face_one_contact(ctx, key):
    fid, u = key
    f = _small(ctx, fid, 4)
    if f is None or not ctx.in_class(f, "F4'") or u not in ctx.c0 or u not in f.vertices:
        return None
    u, v, w, x = _around(f, u)
    if ctx.on_triangle(u) and ctx.on_triangle(w):
        return None
    return {"f": fid, "u": u, "v": v, "w": w, "x": x}


def _alternating_four_face(ctx, key):
    fid, v = key
    f = _small(ctx, fid, 4)
    if f is None or ctx.contact(f) != 0 or v not in f.vertices:
        return None
    v, w, x, u = _around(f, v)
    if node_key(v) > node_key(x):
        return None
    d = ctx.degree
    if not (d(u) <= 4 and d(w) <= 4 and d(v) >= 3 and d(x) >= 3):
        return None
    if ctx.on_triangle(v) and ctx.on_triangle(x):
        return None
    return {"f": fid, "u": u, "v": v, "w": w, "x": x}


# ─── Low-degree neighborhoods ──────────────────────────────────────────────
def _light_three_vertex(ctx, key):
    (v,) = key
    if v in ctx.c0 or ctx.degree(v) != 3:
        return None
    ns = ctx.graph.neighbors(v)
    if ns & ctx.c0 or any(ctx.degree(w) > 4 for w in ns):
        return None
    return {"v": v, "neighbors": tuple(sorted(ns))}


def _three_three_roles(ctx, f, u):
    """(v, w) for a face holding 3-vertex u: v another 3-vertex, w the rest"""
    others = [y for y in f.boundary if y != u]
    threes = sorted(y for y in others if ctx.degree(y) == 3)
    if not threes:
        return None
    v = threes[0]
    (w,) = [y for y in others if y != v]
    return v, w


def _light_pendant(ctx, key):
    fid, u = key
    f = _small(ctx, fid, 3)
    if f is None or u not in f.vertices or ctx.degree(u) != 3:
        return None
    roles = _three_three_roles(ctx, f, u)
    if roles is None:
        return None
    v, w = roles
    u_pendant = ctx.pendant_of(u, f)
    if u_pendant is None or ctx.degree(w) > 5:
        return None
    if not _disjoint(ctx, f.vertices | {u_pendant}) or ctx.degree(u_pendant) > 4:
        return None
    return {"f": fid, "u": u, "v": v, "w": w, "u_pendant": u_pendant}


def special_roles(ctx, fid, u):
    """Roles for extending a coloring through special face fid at its 3-vertex u"""
    f = _face(ctx, fid)
    if f is None or fid not in ctx.special or u not in f.vertices or ctx.degree(u) != 3:
        return None
    u_pendant = ctx.pendant_of(u, f)
    if u_pendant is None or u_pendant in ctx.c0:
        return None
    kind = ctx.special[fid].kind
    if kind == "3,3,5-":
        v, w = _three_three_roles(ctx, f, u)
    else:
        v, w = sorted(y for y in f.boundary if y != u)
    return {"f": fid, "u": u, "v": v, "w": w, "u_pendant": u_pendant, "kind": kind}


def _special_instance(ctx, key):
    return special_roles(ctx, *key)


def _special_candidates(ctx):
    for fid in sorted(ctx.special):
        for u in ctx.graph.face(fid).boundary:
            yield (fid, u)


def _triangle_vertices(ctx):
    return ((f.id, u) for f in ctx.small_faces(3) for u in f.boundary)


def _first_alignment(ctx, face, pattern, at, v):
    seqs = [s for s in ctx.alignments(face, pattern) if s[at] == v]
    return min(seqs, key=lambda s: [node_key(y) for y in s]) if seqs else None


def _four_vertex_pair(ctx, key):
    v, f1_id, f2_id = key
    if v in ctx.c0 or ctx.degree(v) != 4:
        return None
    f1, f2 = _small(ctx, f1_id, 3), _small(ctx, f2_id, 4)
    if f1 is None or f2 is None or v not in f1.vertices or v not in f2.vertices:
        return None
    if ctx.contact(f1) or ctx.contact(f2):
        return None
    tri = _first_alignment(ctx, f1, "3,4,5-", 1, v)
    quad = _first_alignment(ctx, f2, "3,4,3,5+", 1, v)
    if tri is None or quad is None:
        return None
    v3, _, v4 = tri
    v1, _, v2, w = quad
    if len({v1, v2, v3, v4}) != 4:
        return None
    return {"v": v, "f1": f1_id, "f2": f2_id, "v1": v1, "v2": v2, "v3": v3, "v4": v4, "w": w}


def _four_vertex_candidates(ctx):
    for v in ctx.graph.vertices():
        if ctx.degree(v) == 4:
            for f1 in ctx.faces_at(v, 3):
                for f2 in ctx.faces_at(v, 4):
                    yield (v, f1.id, f2.id)


# ─── 5- and 6-vertices near special faces ──────────────────────────────────
def _five_vertex_with_light_triangle(ctx, key):
    v, fid = key
    f = _small(ctx, fid, 3)
    if f is None or v not in f.vertices or v in ctx.c0 or ctx.degree(v) != 5:
        return None
    if ctx.h.get(v, 0) < 3:
        return None
    links = [(g, x) for g, x in special_links(ctx, v) if x not in f.vertices][:3]
    if len(links) < 3:
        return None
    for v4 in sorted(y for y in f.boundary if y != v):
        (v0,) = [y for y in f.boundary if y not in (v, v4)]
        pendant = ctx.pendant_of(v4, f)
        if ctx.degree(v4) != 3 or ctx.degree(v0) < 3 or pendant is None:
            continue
        if ctx.degree(pendant) <= 4 and _disjoint(ctx, f.vertices | {pendant}):
            return {"v": v, "f": fid, "v4": v4, "v0": v0, "v4_pendant": pendant,
                    "links": tuple(links)}
    return None


def _vertex_face_candidates(degree):
    def candidates(ctx):
        for v in ctx.graph.vertices():
            if ctx.degree(v) == degree:
                for f in ctx.faces_at(v, 3):
                    yield (v, f.id)

    return candidates


def _five_vertex_four_pendants(ctx, key):
    (v,) = key
    if v in ctx.c0 or ctx.degree(v) != 5 or ctx.h.get(v, 0) < 4:
        return None
    return {"v": v, "links": tuple(special_links(ctx, v)[:4])}


def _five_vertex_in_four_faces(ctx, key):
    (v,) = key
    if v in ctx.c0 or ctx.degree(v) != 5:
        return None
    fours = [f for f in ctx.faces_at(v, 4) if ctx.contact(f) == 0]
    if len(fours) != 5:
        return None
    qualifying = []
    for f in fours:
        for seq in ctx.alignments(f, "4-,3+,5,5+"):
            if seq[2] == v and not (ctx.on_triangle(seq[1]) and ctx.on_triangle(seq[3])):
                qualifying.append((f.id, seq[0], seq[1], seq[3]))
                break
    if len(qualifying) < 3:
        return None
    pair = next(
        ((a, b) for a, b in combinations(qualifying, 2) if not {a[2], a[3]} & {b[2], b[3]}),
        None,
    )
    if pair is None:
        return None
    return {"v": v, "pair": pair, "qualifying": tuple(q[0] for q in qualifying)}


def _six_vertex(ctx, key):
    w, fid = key
    f = _small(ctx, fid, 3)
    if f is None or w not in f.vertices or ctx.degree(w) != 6:
        return None
    u, v = sorted(y for y in f.boundary if y != w)
    if ctx.degree(u) != 3 or ctx.degree(v) != 3:
        return None
    u_p, v_p = ctx.pendant_of(u, f), ctx.pendant_of(v, f)
    if u_p is None or v_p is None or not _disjoint(ctx, f.vertices | {u_p, v_p}):
        return None
    du, dv = ctx.degree(u_p), ctx.degree(v_p)
    h = ctx.h.get(w, 0)
    links = special_links(ctx, w)
    if min(du, dv) <= 4 and h == 4:
        if dv < du or (dv == du and node_key(v) < node_key(u)):
            u, v, u_p, v_p = v, u, v_p, u_p
        return {"w": w, "f": fid, "case": "A", "u": u, "v": v,
                "u_pendant": u_p, "v_pendant": v_p, "links": tuple(links[:4])}
    if max(du, dv) <= 4 and h >= 3:
        links = links[:3]
        rest = set(ctx.graph.neighbors(w)) - {u, v} - {x for _, x in links}
        return {"w": w, "f": fid, "case": "B", "u": u, "v": v,
                "u_pendant": u_p, "v_pendant": v_p, "links": tuple(links),
                "rest": tuple(sorted(rest))}
    return None


# ─── Registry ──────────────────────────────────────────────────────────────
DETECTORS = {
    d.lemma_id: d
    for d in (
        Detector("P3.1a", "vertex", _vertices, _low_degree),
        Detector("P3.1b", "vertex", _vertices, _two_triangles),
        Detector("P3.1c", "face,face", _adjacent_small_candidates, _adjacent_small_faces),
        Detector("L3.2", "cycle", _cycle_candidates((3, 7)), _separating_triangle_or_heptagon),
        Detector("L3.3", "cycle", _cycle_candidates((4,)), _bad_separating_four),
        Detector("L3.4", "vertex,vertex", _outer_pairs, _outer_chord),
        Detector("L3.5", "face,vertex", _four_faces_with_vertex(on_c0=True), _four_face_on_c0),
        Detector("L3.6", "face,vertex", _four_faces_with_vertex(), _identification_fails, True),
        Detector("L3.7.1", "face,vertex", _four_faces_with_vertex(on_c0=True), _four_face_one_contact, True),
        Detector("L3.7.2", "face,vertex", _four_faces_with_vertex(), _alternating_four_face, True),
        Detector("L3.8", "vertex", _vertices, _light_three_vertex, True),
        Detector("L3.9", "face,vertex", _triangle_vertices, _light_pendant, True),
        Detector("L3.10", "face,vertex", _special_candidates, _special_instance, True),
        Detector("L3.11", "vertex,face,face", _four_vertex_candidates, _four_vertex_pair, True),
        Detector("L3.12.1", "vertex,face", _vertex_face_candidates(5), _five_vertex_with_light_triangle, True),
        Detector("L3.12.2", "vertex", _vertices, _five_vertex_four_pendants, True),
        Detector("L3.12.3", "vertex", _vertices, _five_vertex_in_four_faces, True),
        Detector("L3.13", "vertex,face", _vertex_face_candidates(6), _six_vertex, True),
    )
}

LEMMA_IDS = tuple(DETECTORS)
CONSTRUCTIVE = tuple(k for k, d in DETECTORS.items() if d.constructive)


def detect(ctx, lemma_id, key):
    """Re-check one witness; a ConfigurationMatch when the hypothesis holds, else None"""
    details = DETECTORS[lemma_id].describe(ctx, tuple(key))
    return ConfigurationMatch(lemma_id, tuple(key), details) if details is not None else None


def scan_configurations(graph, c0=None, lemmas=None, ctx=None):
    ctx = ctx if ctx is not None else PlaneContext(graph, c0)
    found = []
    for lemma_id in lemmas or LEMMA_IDS:
        detector = DETECTORS[lemma_id]
        seen = set()
        for key in detector.candidates(ctx):
            key = tuple(key)
            if key in seen:
                continue
            seen.add(key)
            details = detector.describe(ctx, key)
            if details is not None:
                found.append(ConfigurationMatch(lemma_id, key, details))
    logger.info("scan: %d matches over %d detectors", len(found), len(lemmas or LEMMA_IDS))
    return found
