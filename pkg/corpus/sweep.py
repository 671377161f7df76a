# corpus/sweep.py

import hashlib
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from core.class_g import check_membership, triangles
from core.coloring import DV_200, ExtensionProblem, c0_pinnings, solve, superextend, valid_pinnings
from core.context import PlaneContext
from core.discharging import audit
from core.plane_graph import facial_cycle, reroot
from reducible.detectors import LEMMA_IDS, scan_configurations
from utils import config
from utils.errors import PlaneLabError, SweepIoError
from utils.logger import log_event

logger = logging.getLogger("planelab.sweep")

CHECKS = config.SWEEP_CHECKS


@dataclass
class CorpusRecord:
    index: int
    graph: object
    verdicts: dict = field(default_factory=dict)
    matches: dict = field(default_factory=dict)
    negative: bool = False
    finding: str | None = None

    def to_line(self):
        body = " ".join(f"{check}={value}" for check, value in self.verdicts.items())
        return f"RECORD {self.index} {body}".rstrip()


# ─── Per-graph checks ──────────────────────────────────────────────────────
def rooted_at_c0(graph):
    """The graph re-rooted so a facial triangle (else a facial 7-cycle) is the outer face"""
    for length in (3, 7):
        face = facial_cycle(graph, length)
        if face is not None:
            return reroot(graph, face)
    return None


def _membership(graph, state):
    report = check_membership(graph, cap=0)
    state["member"] = report.is_member
    return "yes" if report.is_member else "no"


def _color_200(graph, state):
    return "SAT" if solve(ExtensionProblem(graph, DV_200)) is not None else "UNSAT"


def _superextend_all_triangles(graph, state):
    tris = triangles(graph)
    if not tris:
        return "none"
    total = ok = 0
    for t in tris:
        for pin in valid_pinnings(graph, t.vertices, DV_200):
            total += 1
            ok += superextend(graph, t, pin) is not None
    return f"{ok}/{total}"


def _superextend_seven_cycles(graph, state):
    faces = [f for f in graph.faces if f.degree == 7 and f.is_cycle]
    if not faces:
        return "none"
    total = ok = 0
    for f in faces:
        for pin in c0_pinnings(graph, f.boundary):
            total += 1
            ok += superextend(graph, f.boundary, pin) is not None
    return f"{ok}/{total}"


def _discharge_audit(graph, state):
    rooted = state.get("rooted")
    if rooted is None:
        return "skip"
    report = audit(rooted)
    state["negative"] = bool(report.negatives)
    if report.negatives:
        return f"neg{len(report.negatives)}"
    if report.unclassified:
        return f"unclassified{len(report.unclassified)}"
    return "clean"


def _lemma_scan(graph, state):
    rooted = state.get("rooted")
    if rooted is None:
        return "skip"
    found = scan_configurations(rooted, ctx=PlaneContext(rooted))
    counts = {}
    for m in found:
        counts[m.lemma_id] = counts.get(m.lemma_id, 0) + 1
    state["matches"] = counts
    return str(len(found))


RUNNERS = {
    "membership": _membership,
    "color_200": _color_200,
    "superextend_all_triangles": _superextend_all_triangles,
    "superextend_seven_cycles": _superextend_seven_cycles,
    "discharge_audit": _discharge_audit,
    "lemma_scan": _lemma_scan,
}


def evaluate(job):
    """Run the requested checks on one (index, graph) pair; non-members skip later checks"""
    index, graph, checks = job
    record = CorpusRecord(index, graph)
    state = {"rooted": rooted_at_c0(graph)}
    for check in checks:
        if state.get("member") is False:
            record.verdicts[check] = "skip"
            continue
        try:
            record.verdicts[check] = RUNNERS[check](graph, state)
        except PlaneLabError as e:
            record.verdicts[check] = "error"
            log_event(f"record {index} {check}: {e}")
    record.matches = state.get("matches", {})
    record.negative = state.get("negative", False)
    if state.get("member") and record.negative and "lemma_scan" in checks and not record.matches:
        record.finding = f"FINDING {index} negative final charge without a reducible configuration"
    return record


# ─── Sweep ─────────────────────────────────────────────────────────────────
def _records(stream, checks, workers):
    jobs = ((i, g, checks) for i, g in enumerate(stream))
    if workers <= 1:
        yield from map(evaluate, jobs)
        return
    with ProcessPoolExecutor(max_workers=workers) as executor:
        yield from executor.map(evaluate, jobs, chunksize=16)


def summary_lines(records, lines):
    run_id = hashlib.sha1("\n".join(lines).encode()).hexdigest()[:12]
    members = sum(r.verdicts.get("membership") == "yes" for r in records)
    sat = sum(r.verdicts.get("color_200") == "SAT" for r in records)
    unsat = sum(r.verdicts.get("color_200") == "UNSAT" for r in records)
    negative = sum(r.negative for r in records)
    out = [
        f"# sweep {run_id}",
        f"TOTAL {len(records)} MEMBERS {members} SAT {sat} UNSAT {unsat} NEGCHARGE {negative}",
    ]
    for lemma_id in LEMMA_IDS:
        out.append(f"MATCHES {lemma_id} {sum(r.matches.get(lemma_id, 0) for r in records)}")
    return out


def sweep(stream, checks=None, output=None, workers=None):
    """Check every graph of a stream; RECORD lines go to `output`, counts to `output`.summary"""
    checks = tuple(checks or CHECKS)
    unknown = [c for c in checks if c not in RUNNERS]
    if unknown:
        raise ValueError(f"unknown sweep checks: {', '.join(unknown)}")
    workers = config.WORKERS if workers is None else workers

    records, lines = [], []
    for record in _records(stream, checks, workers):
        records.append(record)
        lines.append(record.to_line())
        if record.finding:
            lines.append(record.finding)
            log_event(record.finding)
        if record.verdicts.get("color_200") == "UNSAT" and record.verdicts.get("membership") == "yes":
            log_event(f"record {record.index}: class member with no (2,0,0)-coloring")

    summary = summary_lines(records, lines)
    if output is not None:
        try:
            with open(output, "w") as fh:
                fh.write("\n".join(lines) + ("\n" if lines else ""))
            with open(f"{output}.summary", "w") as fh:
                fh.write("\n".join(summary) + "\n")
        except OSError as e:
            raise SweepIoError(f"cannot write sweep output {output}: {e}") from e

    failed = sum("error" in r.verdicts.values() for r in records)
    logger.info("loaded: %d, failed: %d", len(records), failed)
    return records, summary
