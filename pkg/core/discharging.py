# core/discharging.py

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from core.context import PlaneContext
from utils.errors import LedgerError, UnclassifiableSituation

logger = logging.getLogger("planelab.discharging")

HALF = Fraction(1, 2)
THREE_HALVES = Fraction(3, 2)


def fmt(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def vertex_key(v):
    return ("vertex", v)


def face_key(fid):
    return ("face", fid)


def label(key):
    return f"{key[0]} {key[1]}"


@dataclass(frozen=True)
class Transfer:
    giver: tuple
    receiver: tuple
    amount: Fraction
    rule: str


class ChargeLedger:
    """Exact charges per vertex and face plus the itemized transfer log"""

    def __init__(self):
        self.initial = {}
        self.transfers = []
        self.unclassified = []
        self._final = {}
        self._seen = set()

    def set_initial(self, key, amount):
        amount = Fraction(amount)
        self.initial[key] = amount
        self._final[key] = amount

    def transfer(self, giver, receiver, amount, rule):
        amount = Fraction(amount)
        if amount <= 0 or (amount * 12).denominator != 1:
            raise LedgerError(f"{rule}: amount {fmt(amount)} is not a positive multiple of 1/12")
        if giver not in self._final or receiver not in self._final:
            raise LedgerError(f"{rule}: unknown element in {label(giver)} -> {label(receiver)}")
        triple = (giver, receiver, rule)
        if triple in self._seen:
            raise LedgerError(f"{rule} applied twice from {label(giver)} to {label(receiver)}")
        self._seen.add(triple)
        self.transfers.append(Transfer(giver, receiver, amount, rule))
        self._final[giver] -= amount
        self._final[receiver] += amount

    def final(self, key):
        return self._final[key]

    def finals(self):
        return dict(self._final)

    def initial_sum(self):
        return sum(self.initial.values(), Fraction(0))

    def final_sum(self):
        return sum(self._final.values(), Fraction(0))

    def received(self, key, rule=None):
        return sum(
            (t.amount for t in self.transfers if t.receiver == key and rule in (None, t.rule)),
            Fraction(0),
        )

    def given(self, key, rule=None):
        return sum(
            (t.amount for t in self.transfers if t.giver == key and rule in (None, t.rule)),
            Fraction(0),
        )


# ─── Structure views ───────────────────────────────────────────────────────
@dataclass
class PendantStructure:
    pendant_faces: dict
    pendant_neighbor: dict
    h: dict


def _context(graph, c0=None, ctx=None):
    return ctx if ctx is not None else PlaneContext(graph, c0)


def face_classes(graph, c0=None):
    return _context(graph, c0).classes


def pendant_structure(graph, c0=None):
    ctx = _context(graph, c0)
    return PendantStructure(ctx.pendant_faces, ctx.pendant_neighbor, ctx.h)


def special_faces(graph, c0=None, order=None):
    return PlaneContext(graph, c0, order).special


def initial_charges(graph, c0=None, ctx=None):
    ctx = _context(graph, c0, ctx)
    ledger = ChargeLedger()
    for v in graph.vertices():
        ledger.set_initial(vertex_key(v), 2 * graph.degree(v) - 6)
    for f in graph.faces:
        ledger.set_initial(face_key(f.id), f.degree + 6 if f.is_outer else f.degree - 6)
    return ledger


# ─── Rules ─────────────────────────────────────────────────────────────────
class _RuleRun:
    def __init__(self, ctx, ledger, strict):
        self.ctx = ctx
        self.ledger = ledger
        self.strict = strict

    def give(self, v, face, amount, rule):
        self.ledger.transfer(vertex_key(v), face_key(face.id), amount, rule)

    def unclassified(self, v, face, reason):
        giver, receiver = label(vertex_key(v)), label(face_key(face.id))
        if self.strict:
            raise UnclassifiableSituation(giver, receiver, reason)
        logger.warning("unclassified: %s -> %s: %s", giver, receiver, reason)
        self.ledger.unclassified.append((giver, receiver, reason))

    def pendant(self, v, contact=0):
        ctx = self.ctx
        return [ctx.graph.face(fid) for fid in ctx.pendant_faces.get(v, ())
                if ctx.contact(ctx.graph.face(fid)) == contact]

    def inner(self, v, k):
        return [f for f in self.ctx.faces_at(v, k) if self.ctx.contact(f) == 0]

    # R1: u off C0
    def off_c0(self, v):
        ctx = self.ctx
        d = ctx.degree(v)
        h = ctx.h.get(v, 0)
        threes, fours = self.inner(v, 3), self.inner(v, 4)
        on_3face = bool(ctx.faces_at(v, 3))

        if d == 4:
            for f in threes:
                self.give(v, f, THREE_HALVES if ctx.matches(f, "3,4,5-") else 1, "R1.1.1")
            for f in fours:
                if on_3face:
                    if ctx.matches(f, "3,4,3,5+"):
                        self.give(v, f, 1, "R1.1.2")
                else:
                    self.give(v, f, HALF, "R1.1.2")

        elif d == 5:
            for f in threes:
                if h >= 4:
                    self.unclassified(v, f, f"R1.2.1 undefined for h={h}")
                else:
                    self.give(v, f, {3: 1, 2: THREE_HALVES}.get(h, 2), "R1.2.1")
            for f in fours:
                if ctx.matches(f, "3,3,5,5+") or on_3face:
                    amount = 1
                elif ctx.matches(f, "3,4,5,5"):
                    amount = Fraction(3, 4)
                else:
                    amount = Fraction(2, 3)
                self.give(v, f, amount, "R1.2.2")

        elif d == 6:
            for f in threes:
                if h >= 5:
                    self.unclassified(v, f, f"R1.3 undefined for h={h}")
                else:
                    self.give(v, f, 3 if h <= 2 else {3: Fraction(5, 2), 4: 2}[h], "R1.3")

        if d >= 7:
            for f in self.pendant(v):
                self.give(v, f, 1, "R1.4")
        elif d in (5, 6):
            for f in self.pendant(v):
                self.give(v, f, 1 if ctx.is_special(f) else HALF, "R1.4")

        if d >= 6:
            for f in fours:
                self.give(v, f, 1, "R1.5")
        if d >= 7:
            for f in threes:
                self.give(v, f, 3, "R1.5")

        if d >= 4 and ctx.on_triangle(v):
            for f in ctx.faces_at(v, 4):
                if ctx.in_class(f, "F4'"):
                    self.give(v, f, HALF, "R1.6")

    # R2: u on C0
    def on_c0(self, v):
        ctx = self.ctx
        amounts = {"F4''": 1, "F3''": THREE_HALVES, "F4'": THREE_HALVES, "F3'": 3}
        for f in ctx.faces_at(v):
            amount = amounts.get(ctx.tag(f))
            if amount is not None:
                self.give(v, f, amount, "R2")
        for f in self.pendant(v):
            self.give(v, f, 1, "R2")

    # R3: C0 pays its low-degree vertices
    def outer(self):
        ctx = self.ctx
        outer = face_key(ctx.c0_face.id)
        pay = {2: 2, 3: THREE_HALVES, 4: 1}
        for v in sorted(ctx.c0):
            amount = pay.get(ctx.degree(v))
            if amount is not None:
                self.ledger.transfer(outer, vertex_key(v), amount, "R3")
        payer = r3_payer(ctx)
        if payer is not None:
            self.ledger.transfer(face_key(payer), outer, 1, "R3")


def c0_profile(ctx):
    """(t2, t3, t4) counts of 2-, 3- and 4-vertices on C0"""
    ds = [ctx.degree(v) for v in ctx.c0]
    return ds.count(2), ds.count(3), ds.count(4)


def r3_payer(ctx):
    """Inner face sharing the most edges with a 7-face C0 that has six 2-vertices"""
    outer = ctx.c0_face
    if outer.degree != 7 or not outer.is_cycle or c0_profile(ctx)[0] != 6:
        return None
    shared = {}
    for a, b in outer.darts():
        fid = ctx.graph.face_of(b, a)
        shared[fid] = shared.get(fid, 0) + 1
    shared.pop(outer.id, None)
    if not shared:
        return None
    return min(shared, key=lambda fid: (-shared[fid], fid))


def apply_rules(graph, c0=None, strict=True, ctx=None):
    ctx = _context(graph, c0, ctx)
    ledger = initial_charges(graph, ctx=ctx)
    run = _RuleRun(ctx, ledger, strict)
    for v in graph.vertices():
        if v in ctx.c0:
            run.on_c0(v)
        else:
            run.off_c0(v)
    run.outer()
    logger.info("rules applied: %d transfers, %d unclassified", len(ledger.transfers), len(ledger.unclassified))
    return ledger


def outer_bound(d_c0, t2):
    return Fraction(6) - Fraction(d_c0, 2) - Fraction(t2, 2)


# ─── Audit ─────────────────────────────────────────────────────────────────
@dataclass
class AuditReport:
    initial_sum: Fraction
    final_sum: Fraction
    outer_final: Fraction
    negatives: list = field(default_factory=list)
    unclassified: list = field(default_factory=list)
    crowded_faces: list = field(default_factory=list)
    profile: tuple = (0, 0, 0)
    d_c0: int = 0
    degenerate: bool = False
    r3_payer: int | None = None
    ledger: ChargeLedger | None = None

    @property
    def conserved(self):
        return self.initial_sum == 0 and self.final_sum == self.initial_sum

    @property
    def outer_positive(self):
        return self.outer_final > 0

    @property
    def clean(self):
        return self.conserved and not self.negatives and not self.unclassified

    def to_lines(self):
        lines = [f"NEG {kind} {ident} {fmt(value)}" for kind, ident, value in self.negatives]
        lines += [f"UNCLASSIFIED {g} -> {r}: {why}" for g, r, why in self.unclassified]
        lines += [f"CROWDED face {fid} meets C0 in {n} vertices" for fid, n in self.crowded_faces]
        t2, t3, t4 = self.profile
        lines.append(
            f"PROFILE d={self.d_c0} t2={t2} t3={t3} t4={t4} "
            f"bound={fmt(outer_bound(self.d_c0, t2))}"
        )
        if self.degenerate:
            lines.append("NOTE t2=7: G is C0 and is trivially superextendable")
        if self.r3_payer is not None:
            lines.append(f"NOTE face {self.r3_payer} pays 1/1 to C0")
        lines.append(
            f"SUM initial={fmt(self.initial_sum)} final={fmt(self.final_sum)} "
            f"outer={fmt(self.outer_final)}"
        )
        return lines


def audit(graph, c0=None):
    ctx = PlaneContext(graph, c0)
    ledger = apply_rules(graph, strict=False, ctx=ctx)
    outer = face_key(ctx.c0_face.id)
    negatives = sorted(
        (key[0], key[1], value)
        for key, value in ledger.finals().items()
        if value < 0 and key != outer
    )
    crowded = [
        (f.id, ctx.contact(f))
        for f in ctx.small_faces()
        if ctx.classes[f.id].tag == "OuterOrOther"
    ]
    profile = c0_profile(ctx)
    return AuditReport(
        initial_sum=ledger.initial_sum(),
        final_sum=ledger.final_sum(),
        outer_final=ledger.final(outer),
        negatives=negatives,
        unclassified=list(ledger.unclassified),
        crowded_faces=crowded,
        profile=profile,
        d_c0=ctx.d_c0,
        degenerate=ctx.d_c0 == 7 and profile[0] == 7,
        r3_payer=r3_payer(ctx),
        ledger=ledger,
    )
