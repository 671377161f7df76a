# reducible/verify.py

import logging
from dataclasses import dataclass, field
from itertools import zip_longest

from core.class_g import check_membership
from core.coloring import (
    DV_200,
    ExtensionProblem,
    enumerate_all,
    sample_colorings,
    solve,
    valid_pinnings,
    validate,
)
from core.context import PlaneContext
from core.plane_graph import identify_vertices, node_key
from reducible.recipes import RECIPES, build_reduction, hypothesis, run_recipe
from utils import config
from utils.errors import GraphError, HypothesisViolated, InvalidPin, NotConstructiveLemma, TooLarge
from utils.logger import log_event

logger = logging.getLogger("planelab.reducible")


@dataclass(frozen=True)
class Discrepancy:
    index: int
    reason: str
    oracle_ok: bool


@dataclass
class ReductionVerdict:
    lemma_id: str
    instances_tested: int = 0
    recipe_successes: int = 0
    oracle_successes: int = 0
    discrepancies: list = field(default_factory=list)
    finding: str | None = None

    def to_line(self):
        return (
            f"LEMMA {self.lemma_id} tested={self.instances_tested} ok={self.recipe_successes} "
            f"oracle_ok={self.oracle_successes} discrepancies={len(self.discrepancies)}"
        )


def check_identification_hypothesis(graph, f, pair, c0=None, ctx=None):
    """Membership report of G[{u,w}] for opposite vertices u, w of a 4-face"""
    ctx = ctx if ctx is not None else PlaneContext(graph, c0)
    face = graph.face(f) if isinstance(f, int) else f
    u, w = pair
    b = face.boundary
    if not ctx.is_small(face) or face.degree != 4 or u not in b or w not in b:
        raise HypothesisViolated(f"{pair} is not a vertex pair of a 4-face")
    if b[(b.index(u) + 2) % 4] != w:
        raise HypothesisViolated(f"{u} and {w} are consecutive on face {face.id}")
    if ctx.on_triangle(u) and ctx.on_triangle(w):
        raise HypothesisViolated(f"both {u} and {w} lie on triangles")
    try:
        merged = identify_vertices(graph, [(u, w)])
    except GraphError as e:
        raise HypothesisViolated(str(e)) from e
    return check_membership(merged)


def _round_robin(streams, budget):
    out = []
    for row in zip_longest(*streams):
        out.extend(x for x in row if x is not None)
        if len(out) >= budget:
            break
    return out[:budget]


def base_colorings(reduction, dv=DV_200, sample_budget=None, seed=None, cap=None):
    """Desired colorings of the reduced graph: all of them, or a seeded sample per C0 pinning"""
    cap = config.ENUMERATION_CAP if cap is None else cap
    reduced = reduction.reduced
    if reduced.number_of_nodes() <= cap:
        return list(enumerate_all(reduced, dv, cap, distinct_from=reduction.c0))
    if sample_budget is None:
        raise TooLarge(
            f"reduced graph has {reduced.number_of_nodes()} vertices; give a sample budget"
        )
    c0 = sorted(reduction.c0, key=node_key)
    pinnings = valid_pinnings(reduced, c0, dv) if c0 else [{}]
    per = -(-sample_budget // len(pinnings))
    streams = [
        sample_colorings(reduced, dv, per, seed=seed, pinned=pin, distinct_from_H=bool(pin))
        for pin in pinnings
    ]
    return _round_robin(streams, sample_budget)


def _judge(reduction, lifted, out, dv):
    if out is None:
        return "recipe stuck"
    missing = [v for v in reduction.target if v not in out]
    if missing:
        return f"left {sorted(missing, key=node_key)} uncolored"
    bad = validate(reduction.target, dv, out)
    if bad:
        return "invalid at " + ",".join(str(x.vertex) for x in bad)
    moved = [v for v, c in lifted.items() if v not in reduction.free and out[v] != c]
    if moved:
        return f"recolored {sorted(moved, key=node_key)} outside the recipe's reach"
    if reduction.designated is not None and out[reduction.designated] != 1:
        return f"{reduction.designated} is not colored 1"
    return None


def _oracle(reduction, lifted, dv):
    pins = {v: c for v, c in lifted.items() if v not in reduction.free}
    if reduction.designated is not None:
        pins[reduction.designated] = 1
    try:
        return solve(ExtensionProblem(reduction.target, dv, pins)) is not None
    except InvalidPin:
        return False


def verify_reduction(graph, c0, match, sample_budget=None, ctx=None, dv=DV_200, seed=None):
    if match.lemma_id not in RECIPES:
        raise NotConstructiveLemma(f"{match.lemma_id} has no recoloring recipe")
    ctx = ctx if ctx is not None else PlaneContext(graph, c0)
    verdict = ReductionVerdict(match.lemma_id)

    if match.lemma_id == "L3.6":
        d = hypothesis(ctx, match)
        report = check_identification_hypothesis(graph, d["f"], (d["u"], d["w"]), ctx=ctx)
        if not report.is_member:
            verdict.finding = f"G[{{{d['u']},{d['w']}}}] is not in the class"
            log_event(f"L3.6 at {match.key}: {verdict.finding}")
            return verdict

    reduction = build_reduction(ctx, match)
    for i, base in enumerate(base_colorings(reduction, dv, sample_budget, seed)):
        lifted = reduction.lifted(base)
        out = run_recipe(ctx, reduction, base, dv)
        reason = _judge(reduction, lifted, out, dv)
        oracle_ok = _oracle(reduction, lifted, dv)
        verdict.instances_tested += 1
        verdict.oracle_successes += oracle_ok
        if reason is None:
            verdict.recipe_successes += 1
        else:
            verdict.discrepancies.append(Discrepancy(i, reason, oracle_ok))
            log_event(f"{match.lemma_id} base #{i}: {reason} (oracle {'SAT' if oracle_ok else 'UNSAT'})")

    logger.info("%s", verdict.to_line())
    return verdict
