# core/context.py

from dataclasses import dataclass

from core.plane_graph import Cycle, as_cycle
from utils.errors import C0NotOuter

SPECIAL_KINDS = ("3,3,5-", "3,4,4", "3,5,5")


def parse_pattern(text):
    """'3,4,5-' -> [(3, 3), (4, 4), (0, 5)]; k- is at most k, k+ at least k"""
    bounds = []
    for token in text.split(","):
        token = token.strip()
        if token.endswith("-"):
            bounds.append((0, int(token[:-1])))
        elif token.endswith("+"):
            bounds.append((int(token[:-1]), None))
        else:
            bounds.append((int(token), int(token)))
    return bounds


def _fits(d, bound):
    lo, hi = bound
    return d >= lo and (hi is None or d <= hi)


@dataclass(frozen=True)
class FaceClass:
    face_id: int
    degree: int
    contact: int
    tag: str


@dataclass(frozen=True)
class SpecialFace:
    face_id: int
    kind: str
    generation: int


class PlaneContext:
    """Derived structure of a plane graph relative to its outer cycle C0"""

    def __init__(self, graph, c0=None, order=None):
        self.graph = graph
        self.cache = {}
        outer = graph.outer_face
        if c0 is not None:
            given = as_cycle(graph, c0)
            if not outer.is_cycle or Cycle.canonical(outer.boundary) != given:
                raise C0NotOuter(f"C0 {given} is not the outer face boundary")
        self.c0_face = outer
        self.c0 = frozenset(outer.boundary)
        self.d_c0 = outer.degree

        self.classes = {f.id: self._classify(f) for f in graph.inner_faces()}
        self._build_pendants()
        self.special = special_fixpoint(self, order)
        self.h = {
            v: sum(1 for fid in self.pendant_faces.get(v, ()) if fid in self.special)
            for v in graph.vertices()
        }

    # ─── faces ────────────────────────────────────────────────────────────
    def degree(self, v):
        return self.graph.degree(v)

    def contact(self, face):
        return len(face.vertices & self.c0)

    def _classify(self, face):
        contact = self.contact(face)
        k = face.degree
        if contact > 2 or not face.is_cycle:
            tag = "OuterOrOther"
        else:
            tag = f"F{k}" + "'" * contact
        return FaceClass(face.id, k, contact, tag)

    def is_small(self, face):
        return not face.is_outer and face.is_cycle and face.degree in (3, 4)

    def small_faces(self, k=None):
        return [
            f for f in self.graph.inner_faces()
            if self.is_small(f) and (k is None or f.degree == k)
        ]

    def faces_at(self, v, k=None):
        """Rule-taking faces of degree k (3 or 4) incident with v"""
        faces = (self.graph.face(fid) for fid in self.graph.faces_at(v))
        return [f for f in faces if self.is_small(f) and (k is None or f.degree == k)]

    def tag(self, face):
        return self.classes[face.id].tag

    def in_class(self, face, tag):
        return not face.is_outer and self.classes[face.id].tag == tag

    def degrees(self, face):
        return tuple(self.degree(v) for v in face.boundary)

    def alignments(self, face, pattern):
        """Rotations and reflections of the boundary whose degrees fit the pattern"""
        bounds = parse_pattern(pattern) if isinstance(pattern, str) else pattern
        b = face.boundary
        if len(bounds) != len(b):
            return []
        found = []
        for seq in _dihedral(b):
            if seq not in found and all(_fits(self.degree(v), bd) for v, bd in zip(seq, bounds)):
                found.append(seq)
        return found

    def matches(self, face, pattern):
        return bool(self.alignments(face, pattern))

    def on_triangle(self, v):
        return self.graph.on_triangle(v)

    # ─── pendant structure ────────────────────────────────────────────────
    def _build_pendants(self):
        self.pendant_neighbor = {}
        self.pendant_faces = {}
        self.pendant_links = {}
        for f in self.small_faces(3):
            for x in f.boundary:
                if self.degree(x) != 3:
                    continue
                off = [w for w in self.graph.neighbors(x) if w not in f.vertices]
                if len(off) != 1:
                    continue
                u = off[0]
                self.pendant_neighbor[(x, f.id)] = u
                self.pendant_links.setdefault(u, []).append((f.id, x))
                faces = self.pendant_faces.setdefault(u, [])
                if f.id not in faces:
                    faces.append(f.id)
        for v in self.pendant_faces:
            self.pendant_faces[v].sort()
            self.pendant_links[v].sort()

    def pendant_of(self, x, face):
        return self.pendant_neighbor.get((x, face.id))

    def special_pendants(self, v):
        return [fid for fid in self.pendant_faces.get(v, ()) if fid in self.special]

    def is_special(self, face):
        return face.id in self.special


def _dihedral(seq):
    n = len(seq)
    rev = tuple(reversed(seq))
    for i in range(n):
        yield seq[i:] + seq[:i]
    for i in range(n):
        yield rev[i:] + rev[:i]


def base_kind(ctx, face):
    """'3,3,5-' or '3,4,4' for a base special 3-face, else None"""
    ds = sorted(ctx.degrees(face))
    if ds.count(3) >= 2 and ds[2] <= 5:
        return "3,3,5-"
    if ds == [3, 4, 4]:
        return "3,4,4"
    return None


def special_fixpoint(ctx, order=None):
    """Least fixpoint of special 3-faces in F3, generation = round added"""
    f3 = [f for f in ctx.small_faces(3) if ctx.contact(f) == 0]
    special = {}
    for f in f3:
        kind = base_kind(ctx, f)
        if kind:
            special[f.id] = SpecialFace(f.id, kind, 0)

    candidates = [f for f in f3 if sorted(ctx.degrees(f)) == [3, 5, 5]]
    if order is not None:
        rank = {fid: i for i, fid in enumerate(order)}
        candidates.sort(key=lambda f: rank.get(f.id, len(rank)))

    generation = 0
    while True:
        generation += 1
        added = []
        for f in candidates:
            if f.id in special:
                continue
            fives = [v for v in f.boundary if ctx.degree(v) == 5]
            count = sum(
                1 for v in fives for fid in ctx.pendant_faces.get(v, ()) if fid in special
            )
            if count >= 6:
                added.append(f.id)
        if not added:
            return special
        for fid in added:
            special[fid] = SpecialFace(fid, "3,5,5", generation)
