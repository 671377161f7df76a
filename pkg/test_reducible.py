# test_reducible.py

import pytest

from core.coloring import DV_200, is_valid
from corpus.enumerate import enumerate_small
from corpus.sweep import rooted_at_c0
from reducible.detectors import (
    CONSTRUCTIVE,
    LEMMA_IDS,
    ConfigurationMatch,
    detect,
    scan_configurations,
)
from reducible.gadgets import GADGETS, all_gadgets, gadget
from reducible.recipes import build_reduction, reduce_and_recolor
from reducible.verify import base_colorings, check_identification_hypothesis, verify_reduction
from utils.errors import HypothesisViolated, NotConstructiveLemma, TooLarge


# ─── Detectors ─────────────────────────────────────────────────────────────
def test_registry_covers_every_lemma():
    assert LEMMA_IDS[:3] == ("P3.1a", "P3.1b", "P3.1c")
    assert set(CONSTRUCTIVE) == {
        "L3.6", "L3.7.1", "L3.7.2", "L3.8", "L3.9", "L3.10", "L3.11",
        "L3.12.1", "L3.12.2", "L3.12.3", "L3.13",
    }


def test_low_degree_vertex_off_c0():
    g = rooted_at_c0(next(g for g in enumerate_small(4) if sorted(g.degree(v) for v in g.vertices()) == [1, 2, 2, 3]))
    matches = scan_configurations(g, lemmas=["P3.1a"])
    assert [m.key for m in matches] == [(v,) for v in g.vertices() if v not in g.outer_face.vertices]


def test_match_line():
    assert ConfigurationMatch("L3.8", (5,)).to_line() == "MATCH L3.8 5"


@pytest.mark.parametrize("name", [n for n in GADGETS if n != "L3.6"])
def test_gadget_configuration_is_found_by_scan(name):
    g = gadget(name)
    ctx = g.context()
    assert g.match(ctx) in scan_configurations(g.graph, ctx=ctx, lemmas=[g.lemma_id])


def test_gadgets_are_class_members():
    from core.class_g import is_member

    for g in all_gadgets():
        assert is_member(g.graph), g.name
        assert g.graph.outer_face.vertices == {1, 2, 3}


def test_unknown_gadget():
    with pytest.raises(KeyError):
        gadget("L9.9")


def test_detect_rejects_a_wrong_key():
    g = gadget("L3.8")
    ctx = g.context()
    assert detect(ctx, "L3.8", (1,)) is None


# ─── Identification ────────────────────────────────────────────────────────
def test_cube_identification_stays_in_class(cube):
    inner = next(f.id for f in cube.faces if f.vertices == {5, 6, 7, 8})
    report = check_identification_hypothesis(cube, inner, (5, 7))
    assert report.is_member
    assert report.triangle_count == 0


def test_identification_needs_opposite_vertices(cube):
    inner = next(f.id for f in cube.faces if f.vertices == {5, 6, 7, 8})
    with pytest.raises(HypothesisViolated):
        check_identification_hypothesis(cube, inner, (5, 6))
    with pytest.raises(HypothesisViolated):
        check_identification_hypothesis(cube, inner, (5, 1))


# ─── Reductions ────────────────────────────────────────────────────────────
def test_structural_lemma_has_no_recipe(k4):
    match = ConfigurationMatch("L3.2", (1, 2, 3))
    with pytest.raises(NotConstructiveLemma):
        verify_reduction(k4, None, match)


def test_stale_match_is_rejected():
    g = gadget("L3.8")
    with pytest.raises(HypothesisViolated):
        reduce_and_recolor(g.graph, g.c0, ConfigurationMatch("L3.8", (1,)), {})


def test_light_three_vertex_reduction_recolors_every_base():
    g = gadget("L3.8")
    ctx = g.context()
    match = g.match(ctx)
    reduction = build_reduction(ctx, match)
    bases = base_colorings(reduction)
    assert bases
    for base in bases:
        out = reduce_and_recolor(g.graph, g.c0, match, base, ctx=ctx)
        assert out is not None and is_valid(reduction.target, DV_200, out)


def test_large_reduction_needs_a_budget():
    g = gadget("L3.12.2")
    ctx = g.context()
    reduction = build_reduction(ctx, g.match(ctx))
    with pytest.raises(TooLarge):
        base_colorings(reduction)
    assert len(base_colorings(reduction, sample_budget=12, seed=3)) <= 12


@pytest.mark.parametrize("name", list(GADGETS))
def test_gadget_recipe_never_disagrees(name):
    g = gadget(name)
    ctx = g.context()
    verdict = verify_reduction(g.graph, g.c0, g.match(ctx), sample_budget=50, ctx=ctx, seed=1)
    assert verdict.discrepancies == []
    assert verdict.finding is not None or verdict.instances_tested > 0
    assert verdict.recipe_successes == verdict.instances_tested
    assert verdict.oracle_successes == verdict.instances_tested
    assert verdict.to_line().startswith(f"LEMMA {g.lemma_id} ")
