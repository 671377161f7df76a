# reducible/recipes.py

import logging
from dataclasses import dataclass

from core.coloring import DV_200
from core.context import PlaneContext
from core.plane_graph import identify_vertices
from reducible.detectors import DETECTORS, identification_roles, special_links, special_roles
from utils.errors import HypothesisViolated, NotConstructiveLemma, ReductionError
from utils.logger import log_event

logger = logging.getLogger("planelab.reducible")


class Stuck(ReductionError):
    """A proof step had no admissible color"""


# ─── Painter ───────────────────────────────────────────────────────────────
class Painter:
    """Partial coloring of the target graph with the recoloring moves the proofs use"""

    def __init__(self, adj, colors, dv=DV_200):
        self.adj = adj
        self.colors = {v: c for v, c in colors.items() if v in adj}
        self.dv = dv

    def same(self, v, c=None):
        c = self.colors.get(v) if c is None else c
        if c is None:
            return 0
        return sum(1 for w in self.adj[v] if w != v and self.colors.get(w) == c)

    def can_take(self, v, c):
        """Coloring v with c keeps v and every neighbor within allowance"""
        old = self.colors.pop(v, None)
        try:
            limit = self.dv.allowance(c)
            hits = [w for w in self.adj[v] if self.colors.get(w) == c]
            return len(hits) <= limit and all(self.same(w) + 1 <= limit for w in hits)
        finally:
            if old is not None:
                self.colors[v] = old

    def proper(self, v):
        present = {self.colors.get(w) for w in self.adj[v]}
        return next((c for c in self.dv.colors if c not in present), None)

    def recolor_properly(self, v):
        c = self.proper(v)
        if c is None:
            raise Stuck(f"no proper color for {v}")
        self.colors[v] = c
        return c

    def set(self, v, c):
        if not self.can_take(v, c):
            raise Stuck(f"{v} cannot take color {c}")
        self.colors[v] = c

    def uncolor(self, *vs):
        for v in vs:
            self.colors.pop(v, None)

    def is_nice(self, v):
        c = self.colors[v]
        return self.same(v) <= self.dv.nice_limit(c)

    def saturated(self, v):
        return self.same(v) >= self.dv.allowance(self.colors[v])

    def normalize(self, x):
        """Leave x nicely colored with 1 or properly colored"""
        if self.colors.get(x) == 1 and self.is_nice(x):
            return
        if self.proper(x) is not None:
            self.recolor_properly(x)
            return
        self.set(x, 1)
        if not self.is_nice(x):
            raise Stuck(f"{x} is neither nice nor proper")


# ─── Special faces ─────────────────────────────────────────────────────────
def special_scope(ctx, fid):
    """Vertices the extension through special face fid may recolor"""
    face = ctx.graph.face(fid)
    scope = set(face.boundary)
    if ctx.special[fid].kind == "3,5,5":
        for y in face.boundary:
            if ctx.degree(y) == 5:
                for g, x in special_links(ctx, y):
                    scope |= special_scope(ctx, g)
    return scope


def extend_special(p, ctx, fid, u):
    """Color the 3-vertex u of special face fid with 1; u and its pendant neighbor are uncolored"""
    roles = special_roles(ctx, fid, u)
    if roles is None:
        raise HypothesisViolated(f"face {fid} is not a special face at 3-vertex {u}")
    v, w, kind = roles["v"], roles["w"], roles["kind"]
    p.uncolor(u)

    if kind == "3,3,5-":
        if p.colors.get(w) != 1:
            p.set(u, 1)
        elif p.colors.get(v) == 1:
            p.recolor_properly(v)
            p.set(u, 1)
        elif p.can_take(u, 1):
            p.set(u, 1)
        else:
            # w carries two 1-neighbors besides u and v
            others = {p.colors.get(y) for y in p.adj[w] if y not in (u, v)}
            free = [c for c in (2, 3) if c not in others]
            if not free:
                raise Stuck(f"{w} has no nice color")
            p.colors[w] = free[0]
            p.recolor_properly(v)
            p.set(u, 1)

    elif kind == "3,4,4":
        if p.can_take(u, 1):
            p.set(u, 1)
            return
        ones = [y for y in (v, w) if p.colors.get(y) == 1]
        if len(ones) == 2:
            crowded = [y for y in ones if p.same(y) >= 2]
            if not crowded:
                raise Stuck(f"face {fid}: no crowded 1-vertex")
            p.recolor_properly(crowded[0])
        else:
            p.recolor_properly(ones[0])
        p.set(u, 1)

    else:
        p.uncolor(v, w)
        for y in (v, w):
            for g, x in special_links(ctx, y):
                p.uncolor(x)
                extend_special(p, ctx, g, x)
        p.colors[v] = 2
        p.colors[w] = 3
        p.set(u, 1)


def _extend_links(p, ctx, links):
    for g, x in links:
        extend_special(p, ctx, g, x)


# ─── Recipes ───────────────────────────────────────────────────────────────
def _light_three_vertex(p, ctx, d):
    v = d["v"]
    if p.proper(v) is not None:
        p.recolor_properly(v)
        return
    (u,) = [y for y in p.adj[v] if p.colors.get(y) == 1]
    if not p.is_nice(u):
        p.recolor_properly(u)
    p.set(v, 1)


def _light_pendant(p, ctx, d):
    u, v, w, u_p = d["u"], d["v"], d["w"], d["u_pendant"]
    p.recolor_properly(v)
    if p.proper(u) is not None:
        p.recolor_properly(u)
        return
    if p.colors[u_p] == 1:
        if not p.is_nice(u_p):
            p.recolor_properly(u_p)
        p.set(u, 1)
    elif p.colors[v] == 1:
        p.set(u, 1)
    elif p.is_nice(w):
        p.set(u, 1)
    else:
        p.uncolor(v)
        p.recolor_properly(w)
        p.set(u, 1)
        if p.can_take(v, 1):
            p.set(v, 1)
        else:
            p.recolor_properly(v)


def _special_instance(p, ctx, d):
    extend_special(p, ctx, d["f"], d["u"])


def _four_vertex_pair(p, ctx, d):
    v, v1, v2, v3, v4 = d["v"], d["v1"], d["v2"], d["v3"], d["v4"]
    for y in (v1, v2, v3):
        p.recolor_properly(y)
    if p.colors[v1] == 1 and p.colors[v2] == 1:
        if 1 in (p.colors[v3], p.colors[v4]):
            p.recolor_properly(v)
        else:
            p.set(v, 1)
        return
    if p.colors[v4] == 1 and p.saturated(v4):
        p.uncolor(v3)
        p.recolor_properly(v4)
        p.recolor_properly(v3)
    p.set(v, 1)


def _five_vertex_with_light_triangle(p, ctx, d):
    v, v4, v0, v4_p = d["v"], d["v4"], d["v0"], d["v4_pendant"]
    _extend_links(p, ctx, d["links"])
    if p.proper(v) is not None:
        p.recolor_properly(v)
        return
    p.uncolor(v4)
    p.normalize(v4_p)
    p.set(v4, 1)
    p.set(v, 5 - p.colors[v0])


def _five_vertex_four_pendants(p, ctx, d):
    _extend_links(p, ctx, d["links"])
    p.recolor_properly(d["v"])


def _repair(p, *vs):
    for y in vs:
        if p.same(y) > p.dv.allowance(p.colors[y]):
            p.recolor_properly(y)


def _identified_pair(p, ctx, d):
    _repair(p, d["v"], d["x"])


def _lift_only(p, ctx, d):
    pass


def _alternating_four_face(p, ctx, d):
    _repair(p, d["u"], d["w"])


def _five_vertex_in_four_faces(p, ctx, d):
    (_, u0, _, _), (_, u2, _, _) = d["pair"]
    _repair(p, u0, u2, d["v"])


def _six_vertex(p, ctx, d):
    w, u, v = d["w"], d["u"], d["v"]
    if d["case"] == "A":
        _extend_links(p, ctx, d["links"])
        p.normalize(d["u_pendant"])
        p.set(u, 1)
        p.recolor_properly(v)
        p.recolor_properly(w)
    else:
        p.uncolor(w)
        _extend_links(p, ctx, d["links"])
        p.normalize(d["v_pendant"])
        p.set(v, 1)
        p.normalize(d["u_pendant"])
        p.set(u, 1)
        p.recolor_properly(w)


RECIPES = {
    "L3.6": _identified_pair,
    "L3.7.1": _lift_only,
    "L3.7.2": _alternating_four_face,
    "L3.8": _light_three_vertex,
    "L3.9": _light_pendant,
    "L3.10": _special_instance,
    "L3.11": _four_vertex_pair,
    "L3.12.1": _five_vertex_with_light_triangle,
    "L3.12.2": _five_vertex_four_pendants,
    "L3.12.3": _five_vertex_in_four_faces,
    "L3.13": _six_vertex,
}


# ─── Reduced graphs ────────────────────────────────────────────────────────
@dataclass
class Reduction:
    lemma_id: str
    details: dict
    reduced: object  # networkx graph the base colorings live on
    c0: frozenset  # C0 as seen in the reduced graph
    lift: dict  # original vertex -> reduced vertex
    target: dict  # adjacency of the graph the recipe must color
    free: frozenset  # vertices the recipe may change
    designated: object = None  # must end with color 1

    def lifted(self, base):
        return {v: base[r] for v, r in self.lift.items() if v in self.target}


def hypothesis(ctx, match):
    """Re-verify a match; L3.6 needs only the identification hypothesis"""
    if match.lemma_id not in DETECTORS:
        raise HypothesisViolated(f"unknown lemma {match.lemma_id}")
    if match.lemma_id == "L3.6":
        details = identification_roles(ctx, *match.key)
    else:
        details = DETECTORS[match.lemma_id].describe(ctx, tuple(match.key))
    if details is None:
        raise HypothesisViolated(f"{match.lemma_id} hypothesis fails at {match.key}")
    return details


def _deleted(d, lemma_id, ctx):
    if lemma_id == "L3.8":
        return {d["v"]}, set(ctx.graph.neighbors(d["v"])) | {d["v"]}
    if lemma_id == "L3.9":
        return {d["u"], d["v"]}, {d["u"], d["v"], d["w"], d["u_pendant"]}
    if lemma_id == "L3.11":
        gone = {d["v"], d["v1"], d["v2"], d["v3"]}
        return gone, gone | {d["v4"]}
    if lemma_id in ("L3.12.1", "L3.12.2"):
        links = {x for _, x in d["links"]}
        free = {d["v"]} | links
        for g, _ in d["links"]:
            free |= special_scope(ctx, g)
        if lemma_id == "L3.12.1":
            free |= {d["v4"], d["v4_pendant"]}
        return {d["v"]} | links, free
    if lemma_id == "L3.13":
        links = {x for _, x in d["links"]}
        free = {d["w"], d["u"], d["v"], d["u_pendant"], d["v_pendant"]} | links
        for g, _ in d["links"]:
            free |= special_scope(ctx, g)
        if d["case"] == "A":
            return set(ctx.graph.neighbors(d["w"])) | {d["w"]}, free
        return {d["u"], d["v"]} | links, free
    raise NotConstructiveLemma(lemma_id)


def _parts(d, lemma_id):
    if lemma_id in ("L3.6", "L3.7.1"):
        return [(d["u"], d["w"])], {d["u"], d["w"], d["v"], d["x"]}
    if lemma_id == "L3.7.2":
        return [(d["v"], d["x"])], {d["u"], d["w"], d["v"], d["x"]}
    (_, u0, a0, a1), (_, u2, b0, b1) = d["pair"]
    return [(a0, a1), (b0, b1)], {u0, u2, d["v"], a0, a1, b0, b1}


def build_reduction(ctx, match):
    lemma_id = match.lemma_id
    if lemma_id not in RECIPES:
        raise NotConstructiveLemma(f"{lemma_id} has no recoloring recipe")
    d = hypothesis(ctx, match)
    g = ctx.graph.to_networkx()
    adj = {v: frozenset(ws) for v, ws in ctx.graph.adjacency.items()}

    if lemma_id in ("L3.6", "L3.7.1", "L3.7.2", "L3.12.3"):
        parts, free = _parts(d, lemma_id)
        reduced = identify_vertices(ctx.graph, parts)
        label_of = {v: label for label, part in reduced.graph["merged"].items() for v in part}
        lift = {v: label_of.get(v, v) for v in ctx.graph.vertices()}
        return Reduction(lemma_id, d, reduced, frozenset(lift[v] for v in ctx.c0),
                         lift, adj, frozenset(free))

    if lemma_id == "L3.10":
        gone = {d["u"], d["u_pendant"]}
        reduced = g.subgraph(set(g) - gone).copy()
        target = {v: ws - {d["u_pendant"]} for v, ws in adj.items() if v != d["u_pendant"]}
        lift = {v: v for v in reduced}
        return Reduction(lemma_id, d, reduced, ctx.c0, lift, target,
                         frozenset(special_scope(ctx, d["f"])), designated=d["u"])

    gone, free = _deleted(d, lemma_id, ctx)
    reduced = g.subgraph(set(g) - gone).copy()
    return Reduction(lemma_id, d, reduced, frozenset(ctx.c0 - gone),
                     {v: v for v in reduced}, adj, frozenset(free))


def run_recipe(ctx, reduction, base, dv=DV_200):
    """Lift a base coloring and execute the lemma's recoloring; None when a step is stuck"""
    p = Painter(reduction.target, reduction.lifted(base), dv)
    try:
        RECIPES[reduction.lemma_id](p, ctx, reduction.details)
    except Stuck as e:
        log_event(f"{reduction.lemma_id}: recipe stuck: {e}")
        return None
    return p.colors


def reduce_and_recolor(graph, c0, match, base, ctx=None):
    ctx = ctx if ctx is not None else PlaneContext(graph, c0)
    reduction = build_reduction(ctx, match)
    missing = [v for v in reduction.reduced if v not in base]
    if missing:
        raise HypothesisViolated(f"base coloring misses reduced vertices {missing[:5]}")
    return run_recipe(ctx, reduction, base)
