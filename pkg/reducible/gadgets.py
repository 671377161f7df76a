# reducible/gadgets.py

import math
from dataclasses import dataclass, field

from core.context import PlaneContext
from core.plane_graph import build_from_drawing
from reducible.detectors import ConfigurationMatch, detect, identification_roles
from utils.errors import HypothesisViolated

# Outer triangle shared by every gadget; its vertices get ids 1, 2, 3.
C0_CORNERS = {"A": (-20.0, -20.0), "B": (20.0, -20.0), "C": (0.0, 24.0)}


def polar(r, degrees, origin=(0.0, 0.0)):
    t = math.radians(degrees)
    return origin[0] + r * math.cos(t), origin[1] + r * math.sin(t)


class Drawing:
    """Named straight-line drawing inside the outer triangle A B C"""

    def __init__(self):
        self.ids = {}
        self.coords = {}
        self.edges = []
        for name, xy in C0_CORNERS.items():
            self.add(name, *xy)
        self.path("A", "B", "C", "A")

    def add(self, name, x, y):
        self.ids[name] = len(self.ids) + 1
        self.coords[self.ids[name]] = (float(x), float(y))
        return name

    def at(self, name, r, degrees, origin=None):
        base = (0.0, 0.0) if origin is None else self.coords[self.ids[origin]]
        return self.add(name, *polar(r, degrees, base))

    def edge(self, a, b):
        self.edges.append((self.ids[a], self.ids[b]))

    def path(self, *names):
        for a, b in zip(names, names[1:]):
            self.edge(a, b)

    def star(self, centre, *names):
        for name in names:
            self.edge(centre, name)

    def pendant(self, anchor, degrees, prefix, b_leaves=0):
        """A pendant 3-face x a b hanging off anchor; x links to anchor, a carries a leaf"""
        ox, oy = self.coords[self.ids[anchor]]
        t = math.radians(degrees)
        d = (math.cos(t), math.sin(t))
        p = (-d[1], d[0])

        def point(s, q):
            return ox + s * d[0] + q * p[0], oy + s * d[1] + q * p[1]

        x, a, b = f"{prefix}x", f"{prefix}a", f"{prefix}b"
        self.add(x, *point(1.5, 0.0))
        self.add(a, *point(2.7, 0.7))
        self.add(b, *point(2.7, -0.7))
        self.add(f"{prefix}a1", *point(3.9, 1.2))
        self.path(anchor, x, a, b, x)
        self.edge(a, f"{prefix}a1")
        if b_leaves:
            self.add(f"{prefix}b1", *point(3.9, -1.2))
            self.add(f"{prefix}b2", *point(3.2, -1.8))
            self.star(b, f"{prefix}b1", f"{prefix}b2")
        return x

    def build(self):
        return build_from_drawing(self.coords, self.edges)


@dataclass
class Gadget:
    name: str
    lemma_id: str
    description: str
    graph: object
    ids: dict
    key: tuple
    notes: dict = field(default_factory=dict)

    @property
    def c0(self):
        return tuple(self.ids[n] for n in C0_CORNERS)

    def context(self):
        return PlaneContext(self.graph)

    def match(self, ctx=None):
        ctx = ctx if ctx is not None else self.context()
        if self.lemma_id == "L3.6":
            details = identification_roles(ctx, *self.key)
            found = ConfigurationMatch("L3.6", self.key, details) if details else None
        else:
            found = detect(ctx, self.lemma_id, self.key)
        if found is None:
            raise HypothesisViolated(f"gadget {self.name} no longer matches {self.lemma_id}")
        return found


def face_id(graph, ids, *names):
    want = {ids[n] for n in names}
    for f in graph.inner_faces():
        if f.is_cycle and f.vertices == want:
            return f.id
    raise KeyError(f"no face on {names}")


def _gadget(name, lemma_id, description, drawing, key_names):
    graph = drawing.build()
    ids = drawing.ids
    key = []
    for item in key_names:
        key.append(face_id(graph, ids, *item) if isinstance(item, tuple) else ids[item])
    return Gadget(name, lemma_id, description, graph, dict(ids), tuple(key))


# ─── Lemma gadgets ─────────────────────────────────────────────────────────
def light_three_vertex():
    g = Drawing()
    g.add("v", 0, 0)
    g.add("p", -2, 0)
    g.add("q", 2, 0)
    g.add("r", 0, 2)
    g.add("p1", -3, 1)
    g.add("p2", -2, 2)
    g.star("v", "p", "q", "r")
    g.star("p", "p1", "p2", "A")
    return _gadget("L3.8", "L3.8", "3-vertex with three light neighbors off C0", g, ["v"])


def light_pendant():
    g = Drawing()
    for name, xy in {"u": (-1, 0), "v": (1, 0), "w": (0, 1.5), "u'": (-3, 0), "v'": (3, 0),
                     "w1": (-1, 3), "w2": (1, 3), "u1": (-4, 1), "u2": (-3, -2)}.items():
        g.add(name, *xy)
    g.path("u", "v", "w", "u")
    g.edge("u", "u'")
    g.edge("v", "v'")
    g.star("w", "w1", "w2")
    g.star("u'", "u1", "u2", "A")
    return _gadget("L3.9", "L3.9", "(3,3,4)-face whose 3-vertex u has a 4-vertex pendant neighbor",
                   g, [("u", "v", "w"), "u"])


def special_344():
    g = Drawing()
    for name, xy in {"u": (0, -1), "v": (-1, 0.8), "w": (1, 0.8), "u'": (0, -3),
                     "v1": (-2.5, 0.5), "v2": (-1.5, 2.5), "w1": (2.5, 0.5), "w2": (1.5, 2.5)}.items():
        g.add(name, *xy)
    g.path("u", "v", "w", "u")
    g.edge("u", "u'")
    g.edge("u'", "A")
    g.star("v", "v1", "v2")
    g.star("w", "w1", "w2")
    return _gadget("L3.10-344", "L3.10", "special (3,4,4)-face", g, [("u", "v", "w"), "u"])


def special_335():
    g = Drawing()
    for name, xy in {"u": (-1, 0), "v": (1, 0), "w": (0, 1.5), "u'": (-3, 0), "v'": (3, 0),
                     "w1": (-1.2, 3), "w2": (0, 3.2), "w3": (1.2, 3)}.items():
        g.add(name, *xy)
    g.path("u", "v", "w", "u")
    g.edge("u", "u'")
    g.edge("u'", "A")
    g.edge("v", "v'")
    g.star("w", "w1", "w2", "w3")
    return _gadget("L3.10-335", "L3.10", "special (3,3,5)-face", g, [("u", "v", "w"), "u"])


def special_355():
    g = Drawing()
    for name, xy in {"v": (-2, 0), "w": (2, 0), "u": (0, 1.5), "u'": (0, 3)}.items():
        g.add(name, *xy)
    g.path("u", "v", "w", "u")
    g.path("u", "u'", "C")
    for i, angle in enumerate((130, 195, 260)):
        g.pendant("v", angle, f"v{i}", b_leaves=2)
    for i, angle in enumerate((50, 345, 280)):
        g.pendant("w", angle, f"w{i}", b_leaves=2)
    return _gadget("special-355", "L3.10",
                   "(3,5,5)-face whose 5-vertices carry six pendant (3,3,4)-faces",
                   g, [("u", "v", "w"), "u"])


def identified_pair_base():
    g = Drawing()
    for name, xy in {"u": (0, -1), "v": (1, 0), "w": (0, 1), "x": (-1, 0),
                     "u1": (-0.7, -2.5), "u2": (0.7, -2.5), "w1": (0, 2.5),
                     "t1": (2.5, 0.8), "t2": (2.5, -0.8)}.items():
        g.add(name, *xy)
    g.path("u", "v", "w", "x", "u")
    g.star("u", "u1", "u2")
    g.edge("w", "w1")
    g.path("v", "t1", "t2", "v")
    g.edge("x", "A")
    return g


def identify_opposite():
    return _gadget("L3.6", "L3.6", "4-face u v w x, neither u nor w on a triangle",
                   identified_pair_base(), [("u", "v", "w", "x"), "u"])


def alternating_four_face():
    return _gadget("L3.7.2", "L3.7.2", "(4,4,3,3)-face in F4 with only v on a triangle",
                   identified_pair_base(), [("u", "v", "w", "x"), "v"])


def four_face_one_contact():
    g = Drawing()
    for name, rel in {"v": (7, 2), "w": (8, 7), "x": (4, 6), "w1": (11, 9.5)}.items():
        g.add(name, -20 + rel[0], -20 + rel[1])
    g.path("A", "v", "w", "x", "A")
    g.edge("w", "w1")
    return _gadget("L3.7.1", "L3.7.1", "4-face meeting C0 in u=A, w off every triangle",
                   g, [("A", "v", "w", "x"), "A"])


def four_vertex_pair():
    g = Drawing()
    for name, xy in {"v": (0, 0), "v1": (-1, 1), "w": (0, 2), "v2": (1, 1), "v3": (-1, -1),
                     "v4": (1, -1), "a1": (-2, 1), "b1": (2, 1), "w1": (-1, 3), "w2": (1, 3),
                     "y1": (2.5, -1), "y2": (1.5, -2.5)}.items():
        g.add(name, *xy)
    g.path("v", "v1", "w", "v2", "v")
    g.path("v", "v3", "v4", "v")
    g.edge("v1", "a1")
    g.edge("v2", "b1")
    g.star("w", "w1", "w2", "C")
    g.star("v4", "y1", "y2")
    g.edge("v3", "A")
    return _gadget("L3.11", "L3.11", "4-vertex on a (3,4,4)-face and a (3,4,3,5)-face",
                   g, ["v", ("v3", "v", "v4"), ("v1", "v", "v2", "w")])


def five_vertex_light_triangle():
    g = Drawing()
    g.add("v", 0, 0)
    g.at("v4", 1.5, 215)
    g.at("v0", 1.5, 270)
    g.at("v4'", 3, 215)
    g.at("q", 3, 270)
    g.at("s1", 4, 200)
    g.at("s2", 4, 240)
    g.path("v", "v4", "v0", "v")
    g.edge("v4", "v4'")
    g.star("v4'", "s1", "s2", "A")
    g.edge("v0", "q")
    for i, angle in enumerate((340, 50, 130)):
        g.pendant("v", angle, f"p{i}")
    return _gadget("L3.12.1", "L3.12.1",
                   "5-vertex on a (3,5,3)-face with three pendant special faces",
                   g, ["v", ("v4", "v", "v0")])


def five_vertex_four_pendants():
    g = Drawing()
    g.add("v", 0, 0)
    g.edge("v", "A")
    for i, angle in enumerate((297, 9, 81, 153)):
        g.pendant("v", angle, f"p{i}")
    return _gadget("L3.12.2", "L3.12.2", "5-vertex with four pendant special faces", g, ["v"])


def five_vertex_flower():
    g = Drawing()
    g.add("v", 0, 0)
    for i in range(5):
        g.at(f"v{i}", 2, 90 + 72 * i)
    for i in range(5):
        g.at(f"u{i}", 3.2, 126 + 72 * i)
    for i in range(5):
        g.edge("v", f"v{i}")
        g.path(f"v{i}", f"u{i}", f"v{(i + 1) % 5}")
    for i in (1, 3):
        centre = 90 + 72 * i
        g.at(f"v{i}a", 3.5, centre - 8)
        g.at(f"v{i}b", 3.5, centre + 8)
        g.star(f"v{i}", f"v{i}a", f"v{i}b")
    g.at("z", 4.2, 126)
    g.edge("u0", "z")
    g.edge("u2", "A")
    return _gadget("L3.12.3", "L3.12.3", "5-vertex inside five (4-,3+,5,5+)-type 4-faces",
                   g, ["v"])


def _six_vertex(name, pendants, description):
    g = Drawing()
    g.add("w", 0, 0)
    g.at("u", 1.5, 200)
    g.at("v", 1.5, 250)
    g.at("u'", 3, 200)
    g.at("v'", 3, 250)
    g.at("s1", 4, 190)
    g.at("s2", 4, 215)
    g.path("w", "u", "v", "w")
    g.edge("u", "u'")
    g.edge("v", "v'")
    g.star("u'", "s1", "s2", "A")
    for i, angle in enumerate((310, 10, 70, 130)[:pendants]):
        g.pendant("w", angle, f"p{i}")
    if pendants == 3:
        g.at("leaf", 1.5, 130)
        g.edge("w", "leaf")
    return _gadget(name, "L3.13", description, g, ["w", ("u", "v", "w")])


def six_vertex_first_clause():
    return _six_vertex("L3.13-A", 4, "(3,3,6)-face, four pendant special faces at w")


def six_vertex_second_clause():
    return _six_vertex("L3.13-B", 3, "(3,3,6)-face, light pendants, three special faces at w")


GADGETS = {
    name: factory
    for name, factory in (
        ("L3.6", identify_opposite),
        ("L3.7.1", four_face_one_contact),
        ("L3.7.2", alternating_four_face),
        ("L3.8", light_three_vertex),
        ("L3.9", light_pendant),
        ("L3.10-344", special_344),
        ("L3.10-335", special_335),
        ("special-355", special_355),
        ("L3.11", four_vertex_pair),
        ("L3.12.1", five_vertex_light_triangle),
        ("L3.12.2", five_vertex_four_pendants),
        ("L3.12.3", five_vertex_flower),
        ("L3.13-A", six_vertex_first_clause),
        ("L3.13-B", six_vertex_second_clause),
    )
}


def gadget(name):
    if name not in GADGETS:
        raise KeyError(f"unknown gadget {name!r}; known: {', '.join(GADGETS)}")
    return GADGETS[name]()


def all_gadgets():
    return [factory() for factory in GADGETS.values()]
