# test_discharging.py

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.discharging import (
    ChargeLedger,
    apply_rules,
    audit,
    face_classes,
    face_key,
    fmt,
    initial_charges,
    outer_bound,
    pendant_structure,
    special_faces,
    vertex_key,
)
from core.plane_graph import build_from_drawing
from corpus.enumerate import enumerate_small
from reducible.gadgets import gadget
from utils.errors import C0NotOuter, LedgerError

SMALL = [g for n in range(3, 8) for g in enumerate_small(n)]


def heptagon(hub=False):
    coords = {
        i + 1: (10 * math.cos(math.radians(90 + i * 360 / 7)), 10 * math.sin(math.radians(90 + i * 360 / 7)))
        for i in range(7)
    }
    edges = [(i, i % 7 + 1) for i in range(1, 8)]
    if hub:
        coords[8] = (0.0, 0.0)
        edges.append((1, 8))
    return build_from_drawing(coords, edges)


def test_fmt_always_prints_a_fraction():
    assert fmt(2) == "2/1"
    assert fmt(Fraction(-3, 2)) == "-3/2"
    assert fmt(0) == "0/1"


def test_outer_bound():
    assert outer_bound(3, 0) == Fraction(9, 2)
    assert outer_bound(7, 6) == Fraction(-1, 2)


def test_ledger_rejects_bad_transfers():
    ledger = ChargeLedger()
    ledger.set_initial(vertex_key(1), 0)
    ledger.set_initial(face_key(0), 0)
    ledger.transfer(vertex_key(1), face_key(0), Fraction(1, 2), "R1.4")
    with pytest.raises(LedgerError):
        ledger.transfer(vertex_key(1), face_key(0), Fraction(1, 2), "R1.4")
    with pytest.raises(LedgerError):
        ledger.transfer(vertex_key(1), face_key(0), Fraction(1, 5), "R1.5")
    with pytest.raises(LedgerError):
        ledger.transfer(vertex_key(1), face_key(9), 1, "R1.5")
    with pytest.raises(LedgerError):
        ledger.transfer(vertex_key(1), face_key(0), 0, "R1.6")
    assert ledger.final(vertex_key(1)) == Fraction(-1, 2)
    assert ledger.received(face_key(0)) == Fraction(1, 2)


def test_triangle_audit(k3):
    report = audit(k3)
    inner = k3.inner_faces()[0].id
    assert report.conserved
    assert report.outer_final == 3
    assert report.negatives == [("face", inner, Fraction(-3))]
    assert report.crowded_faces == [(inner, 3)]
    lines = report.to_lines()
    assert f"NEG face {inner} -3/1" in lines
    assert "PROFILE d=3 t2=3 t3=0 t4=0 bound=3/1" in lines
    assert lines[-1] == "SUM initial=0/1 final=0/1 outer=3/1"


def test_c0_must_be_the_outer_face(k4):
    with pytest.raises(C0NotOuter):
        audit(k4, (1, 2, 4))


def test_bare_heptagon_is_degenerate():
    report = audit(heptagon())
    assert report.degenerate
    assert report.profile == (7, 0, 0)
    assert "NOTE t2=7: G is C0 and is trivially superextendable" in report.to_lines()


def test_heptagon_with_six_two_vertices_gets_reverse_transfer():
    g = heptagon(hub=True)
    report = audit(g)
    assert report.profile[0] == 6
    payer = report.r3_payer
    assert payer is not None
    assert f"NOTE face {payer} pays 1/1 to C0" in report.to_lines()
    outer = face_key(g.outer_face.id)
    assert report.ledger.received(outer, "R3") == 1


def test_special_355_face_joins_in_a_later_generation():
    g = gadget("special-355")
    special = special_faces(g.graph)
    later = [s for s in special.values() if s.kind == "3,5,5"]
    assert later and all(s.generation >= 1 for s in later)
    assert all(s.generation == 0 for s in special.values() if s.kind != "3,5,5")


def test_special_faces_ignore_iteration_order():
    g = gadget("special-355")
    forward = special_faces(g.graph)
    backward = special_faces(g.graph, order=[f.id for f in reversed(g.graph.faces)])
    assert {k: v.kind for k, v in forward.items()} == {k: v.kind for k, v in backward.items()}


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL))
def test_charges_sum_to_zero_before_and_after(graph):
    assert initial_charges(graph).initial_sum() == 0
    report = audit(graph)
    assert report.initial_sum == 0
    assert report.final_sum == 0


def test_inner_triangles_of_k4_touch_c0_twice(k4):
    classes = face_classes(k4)
    assert sorted(c.tag for c in classes.values()) == ["F3''"] * 3
    ledger = initial_charges(k4)
    assert ledger.initial[face_key(k4.outer_face.id)] == 9
    assert all(ledger.initial[face_key(fid)] == -3 for fid in classes)
    assert ledger.initial[vertex_key(4)] == 0


def test_pendant_face_hangs_off_the_outside_neighbor():
    g = gadget("L3.10-344")
    fid = g.key[0]
    structure = pendant_structure(g.graph)
    assert structure.pendant_faces[g.ids["u'"]] == [fid]
    assert structure.pendant_neighbor[(g.ids["u"], fid)] == g.ids["u'"]
    assert g.ids["A"] not in structure.pendant_faces


def test_special_344_face_is_paid_by_its_four_vertices():
    g = gadget("L3.10-344")
    fid = g.key[0]
    ledger = apply_rules(g.graph, strict=False)
    paid = sorted((t.giver, t.amount, t.rule) for t in ledger.transfers if t.receiver == face_key(fid))
    assert paid == sorted(
        (vertex_key(g.ids[x]), Fraction(3, 2), "R1.1.1") for x in ("v", "w")
    )
    assert ledger.final(face_key(fid)) == 0
    assert special_faces(g.graph)[fid].kind == "3,4,4"


# ─── Golden charges ────────────────────────────────────────────────────────
def seven_hub():
    """C0 = 1 2 3 around a 7-vertex 4 on a (3,3,7)-face 4 5 6"""
    coords = {
        1: (-20, -12), 2: (20, -12), 3: (0, 24), 4: (0, 0), 5: (-3, -5),
        6: (3, -5), 7: (0, -9), 8: (-6, 6), 9: (6, 6),
    }
    edges = [
        (1, 2), (2, 3), (3, 1), (4, 1), (4, 2), (4, 3), (4, 5), (4, 6), (4, 8), (4, 9),
        (5, 6), (5, 7), (6, 7), (7, 1), (7, 2), (8, 1), (8, 3), (9, 2), (9, 3),
    ]
    return build_from_drawing(coords, edges)


def face_with(graph, *vertices):
    return next(f.id for f in graph.inner_faces() if f.vertices == set(vertices))


def test_three_three_seven_face_ends_at_zero():
    g = seven_hub()
    assert g.degree(4) == 7 and g.degree(5) == g.degree(6) == 3
    f = face_key(face_with(g, 4, 5, 6))
    ledger = apply_rules(g)
    assert ledger.initial[f] == -3
    assert [(t.giver, t.amount, t.rule) for t in ledger.transfers if t.receiver == f] == [
        (vertex_key(4), Fraction(3), "R1.5")
    ]
    assert ledger.final(f) == 0


def test_triangle_and_four_face_initial_charges():
    g = seven_hub()
    ledger = initial_charges(g)
    assert ledger.initial[face_key(face_with(g, 4, 5, 6))] == Fraction(-3)
    assert ledger.initial[face_key(face_with(g, 1, 4, 5, 7))] == Fraction(-2)
    assert ledger.initial[face_key(g.outer_face.id)] == Fraction(9)


def test_two_vertex_on_c0_ends_at_zero():
    g = heptagon(hub=True)
    ledger = apply_rules(g)
    assert g.degree(2) == 2
    assert ledger.initial[vertex_key(2)] == -2
    assert ledger.received(vertex_key(2), "R3") == 2
    assert ledger.final(vertex_key(2)) == 0


def test_four_face_touching_c0_twice_ends_at_zero(cube):
    fid = face_with(cube, 1, 2, 5, 6)
    assert face_classes(cube)[fid].tag == "F4''"
    ledger = apply_rules(cube)
    f = face_key(fid)
    assert ledger.initial[f] == -2
    assert sorted((t.giver, t.amount) for t in ledger.transfers if t.receiver == f) == [
        (vertex_key(1), Fraction(1)),
        (vertex_key(2), Fraction(1)),
    ]
    assert ledger.final(f) == 0


def test_outer_bound_at_five_two_vertices():
    assert outer_bound(7, 5) == 1
