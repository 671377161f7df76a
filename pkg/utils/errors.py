# utils/errors.py


class PlaneLabError(Exception):
    """Base class for every error the lab raises on bad input or bad state"""


# ── Graph structure ─────────────────────────────────
class GraphError(PlaneLabError):
    pass


class NotSimple(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EulerViolation(GraphError):
    pass


class BadOuterEdge(GraphError):
    pass


class NotACycle(GraphError):
    pass


class NotIndependent(GraphError):
    pass


class Overlap(GraphError):
    pass


# ── Coloring ────────────────────────────────────────
class ColoringError(PlaneLabError):
    pass


class PartialAssignment(ColoringError):
    pass


class Uncolored(ColoringError):
    pass


class InvalidColor(ColoringError):
    pass


class InvalidPin(ColoringError):
    pass


class BadCycleLength(ColoringError):
    pass


class TooLarge(PlaneLabError):
    pass


# ── Discharging ─────────────────────────────────────
class DischargeError(PlaneLabError):
    pass


class C0NotOuter(DischargeError):
    pass


class UnclassifiableSituation(DischargeError):
    def __init__(self, giver, receiver, reason):
        super().__init__(f"{giver} -> {receiver}: {reason}")
        self.giver = giver
        self.receiver = receiver
        self.reason = reason


class LedgerError(DischargeError):
    pass


# ── Reducible configurations ────────────────────────
class ReductionError(PlaneLabError):
    pass


class NotConstructiveLemma(ReductionError):
    pass


class HypothesisViolated(ReductionError):
    pass


# ── Corpus I/O ──────────────────────────────────────
class CorpusError(PlaneLabError):
    pass


class BadHeader(CorpusError):
    pass


class TruncatedRecord(CorpusError):
    pass


class InvalidRotation(CorpusError):
    pass


class RotlistSyntaxError(CorpusError):
    def __init__(self, line, message):
        super().__init__(f"line {line}: {message}")
        self.line = line


class SweepIoError(CorpusError):
    pass
