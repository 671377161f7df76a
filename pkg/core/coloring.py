# core/coloring.py

import random
from dataclasses import dataclass, field

from core.plane_graph import adjacency_of, as_cycle, node_key
from utils import config
from utils.errors import (
    BadCycleLength,
    InvalidColor,
    InvalidPin,
    PartialAssignment,
    TooLarge,
    Uncolored,
)

# A ColorAssignment is a plain dict vertex -> color in 1..k.


@dataclass(frozen=True)
class DeficiencyVector:
    deficiencies: tuple

    def __post_init__(self):
        object.__setattr__(self, "deficiencies", tuple(int(s) for s in self.deficiencies))
        if not self.deficiencies or any(s < 0 for s in self.deficiencies):
            raise InvalidColor(f"bad deficiency vector {self.deficiencies}")

    @classmethod
    def parse(cls, text):
        try:
            return cls(tuple(int(s) for s in str(text).replace(" ", "").split(",")))
        except ValueError as e:
            raise InvalidColor(f"bad deficiency vector {text!r}") from e

    @property
    def k(self):
        return len(self.deficiencies)

    @property
    def colors(self):
        return range(1, self.k + 1)

    def allowance(self, color):
        return self.deficiencies[color - 1]

    def nice_limit(self, color):
        return max(self.allowance(color) - 1, 0)

    def dominates(self, other):
        return self.k == other.k and all(a >= b for a, b in zip(self.deficiencies, other.deficiencies))

    def __str__(self):
        return ",".join(str(s) for s in self.deficiencies)


DV_200 = DeficiencyVector((2, 0, 0))


def default_dv():
    return DeficiencyVector(config.DEFAULT_DEFICIENCY)


@dataclass(frozen=True)
class Violation:
    vertex: object
    color: int
    same: int
    allowance: int


@dataclass(frozen=True)
class VertexStatus:
    kind: str  # proper | nice | saturated | violation
    same: int
    allowance: int


@dataclass
class ExtensionProblem:
    graph: object
    dv: DeficiencyVector = DV_200
    pinned: dict = field(default_factory=dict)
    distinct_from_H: bool = False
    break_symmetry: bool = False


# ─── Checks ────────────────────────────────────────────────────────────────
def same_color_count(adj, colors, v):
    c = colors[v]
    return sum(1 for w in adj[v] if colors.get(w) == c)


def _check_colors(dv, colors):
    for v, c in colors.items():
        if c not in dv.colors:
            raise InvalidColor(f"vertex {v} has color {c} outside 1..{dv.k}")


def validate(graph, dv, assignment):
    """Every vertex whose same-colored neighbor count exceeds its color's allowance"""
    adj = adjacency_of(graph)
    missing = [v for v in adj if v not in assignment]
    if missing:
        raise PartialAssignment(f"{len(missing)} vertices uncolored, first {min(missing, key=node_key)}")
    _check_colors(dv, assignment)
    violations = []
    for v in sorted(adj, key=node_key):
        c = assignment[v]
        same = same_color_count(adj, assignment, v)
        if same > dv.allowance(c):
            violations.append(Violation(v, c, same, dv.allowance(c)))
    return violations


def is_valid(graph, dv, assignment):
    return not validate(graph, dv, assignment)


def partial_violations(graph, dv, colors):
    """validate() restricted to the colored vertices of a partial assignment"""
    adj = adjacency_of(graph)
    return [
        v
        for v in sorted(colors, key=node_key)
        if v in adj and same_color_count(adj, colors, v) > dv.allowance(colors[v])
    ]


def vertex_status(graph, assignment, v, dv=DV_200):
    if v not in assignment:
        raise Uncolored(f"vertex {v} is not colored")
    adj = adjacency_of(graph)
    c = assignment[v]
    same = same_color_count(adj, assignment, v)
    allowance = dv.allowance(c)
    if same == 0:
        kind = "proper"
    elif same <= dv.nice_limit(c):
        kind = "nice"
    elif same <= allowance:
        kind = "saturated"
    else:
        kind = "violation"
    return VertexStatus(kind, same, allowance)


# ─── Search ────────────────────────────────────────────────────────────────
class _Search:
    """Backtracking over a fixed vertex order with incremental same-color counters"""

    def __init__(self, adj, dv, order, colors, anchor=frozenset(), break_symmetry=False, rng=None):
        self.adj = adj
        self.dv = dv
        self.order = order
        self.colors = dict(colors)
        self.anchor = anchor
        self.break_symmetry = break_symmetry
        self.rng = rng
        self.same = {v: same_color_count(adj, self.colors, v) for v in self.colors}
        self.used = {}
        for c in self.colors.values():
            self.used[c] = self.used.get(c, 0) + 1

    def admissible(self, v, c):
        limit = self.dv.allowance(c)
        hits = [w for w in self.adj[v] if self.colors.get(w) == c]
        if len(hits) > limit:
            return None
        for w in hits:
            if self.same[w] + 1 > limit:
                return None
            if self.anchor and (v in self.anchor) != (w in self.anchor):
                return None
        return hits

    def _candidates(self):
        order = list(self.dv.colors)
        if self.rng is not None:
            self.rng.shuffle(order)
        if not self.break_symmetry:
            return order
        keep = []
        for c in order:
            if not self.used.get(c) and any(
                not self.used.get(b) and self.dv.allowance(b) == self.dv.allowance(c)
                for b in range(1, c)
            ):
                continue
            keep.append(c)
        return keep

    def _assign(self, v, c, hits):
        self.colors[v] = c
        self.same[v] = len(hits)
        for w in hits:
            self.same[w] += 1
        self.used[c] = self.used.get(c, 0) + 1

    def _unassign(self, v, c, hits):
        del self.colors[v]
        del self.same[v]
        for w in hits:
            self.same[w] -= 1
        self.used[c] -= 1

    def run(self, i=0):
        if i == len(self.order):
            yield dict(self.colors)
            return
        v = self.order[i]
        for c in self._candidates():
            hits = self.admissible(v, c)
            if hits is None:
                continue
            self._assign(v, c, hits)
            yield from self.run(i + 1)
            self._unassign(v, c, hits)


def _check_pins(adj, dv, pinned):
    for v, c in pinned.items():
        if v not in adj:
            raise InvalidPin(f"pinned vertex {v} is not in the graph")
        if c not in dv.colors:
            raise InvalidPin(f"pinned vertex {v} has color {c} outside 1..{dv.k}")
    bad = [v for v in pinned if same_color_count(adj, pinned, v) > dv.allowance(pinned[v])]
    if bad:
        raise InvalidPin(f"pinned coloring is invalid at {sorted(bad, key=node_key)}")


def _solutions(problem, rng=None):
    adj = adjacency_of(problem.graph)
    pinned = dict(problem.pinned)
    _check_pins(adj, problem.dv, pinned)
    order = sorted(
        (v for v in adj if v not in pinned), key=lambda v: (-len(adj[v]), node_key(v))
    )
    anchor = frozenset(pinned) if problem.distinct_from_H else frozenset()
    search = _Search(adj, problem.dv, order, pinned, anchor, problem.break_symmetry, rng)
    return search.run()


def solve(problem, rng=None):
    """A total valid assignment extending the pins, or None when none exists"""
    return next(_solutions(problem, rng), None)


def sample_colorings(graph, dv, count, seed=None, pinned=None, distinct_from_H=False):
    """Up to `count` distinct valid colorings drawn with seeded random color orders"""
    rng = random.Random(config.RANDOM_SEED if seed is None else seed)
    problem = ExtensionProblem(graph, dv, dict(pinned or {}), distinct_from_H)
    seen = set()
    samples = []
    for _ in range(4 * count):
        if len(samples) >= count:
            break
        found = solve(problem, rng)
        if found is None:
            break
        key = tuple(sorted(found.items(), key=lambda kv: node_key(kv[0])))
        if key not in seen:
            seen.add(key)
            samples.append(found)
    return samples


def enumerate_all(graph, dv, cap=None, distinct_from=frozenset()):
    """Every valid total assignment, lexicographic over vertices in id order"""
    adj = adjacency_of(graph)
    cap = config.ENUMERATION_CAP if cap is None else cap
    if len(adj) > cap:
        raise TooLarge(f"{len(adj)} vertices exceeds enumeration cap {cap}")
    order = sorted(adj, key=node_key)
    return _Search(adj, dv, order, {}, frozenset(distinct_from)).run()


def valid_pinnings(graph, cycle, dv=DV_200):
    """All valid colorings of the subgraph induced on a cycle's vertices"""
    adj = adjacency_of(graph)
    vs = set(cycle)
    induced = {v: adj[v] & vs for v in vs}
    return list(enumerate_all(induced, dv, cap=len(induced)))


def c0_pinnings(graph, c0, dv=DV_200):
    """Every valid pinning of a triangle C0; a seeded sample of them for a 7-cycle"""
    cycle = as_cycle(graph, c0)
    pins = valid_pinnings(graph, cycle.vertices, dv)
    if cycle.length == 7 and len(pins) > config.SEVEN_CYCLE_PINNINGS:
        picked = random.Random(config.RANDOM_SEED).sample(range(len(pins)), config.SEVEN_CYCLE_PINNINGS)
        pins = [pins[i] for i in sorted(picked)]
    return pins


def superextend(graph, c0, pin, dv=DV_200, break_symmetry=False):
    cycle = as_cycle(graph, c0)
    if cycle.length not in (3, 7):
        raise BadCycleLength(f"C0 has length {cycle.length}; expected 3 or 7")
    if set(pin) != set(cycle.vertices):
        raise InvalidPin("pin must color exactly the vertices of C0")
    return solve(ExtensionProblem(graph, dv, dict(pin), True, break_symmetry))


def format_assignment(assignment):
    return " ".join(f"{v}={assignment[v]}" for v in sorted(assignment, key=node_key))


def parse_pin(text):
    pin = {}
    for part in filter(None, str(text).replace(" ", "").split(",")):
        v, _, c = part.partition("=")
        try:
            pin[int(v)] = int(c)
        except ValueError as e:
            raise InvalidPin(f"bad pin entry {part!r}") from e
    return pin
