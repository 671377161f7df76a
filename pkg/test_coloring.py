# test_coloring.py

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.coloring import (
    DV_200,
    DeficiencyVector,
    ExtensionProblem,
    enumerate_all,
    is_valid,
    parse_pin,
    sample_colorings,
    solve,
    superextend,
    valid_pinnings,
    validate,
    vertex_status,
)
from corpus.enumerate import enumerate_small
from utils.errors import BadCycleLength, InvalidColor, InvalidPin, PartialAssignment, TooLarge

SMALL = [g for n in range(1, 7) for g in enumerate_small(n)]
VECTORS = [DeficiencyVector(d) for d in ((0, 0, 0), (1, 0, 0), (2, 0, 0), (1, 1, 0))]


def test_deficiency_vector_parsing():
    dv = DeficiencyVector.parse("2, 0,0")
    assert dv == DV_200
    assert dv.k == 3
    assert list(dv.colors) == [1, 2, 3]
    assert dv.nice_limit(1) == 1 and dv.nice_limit(2) == 0
    with pytest.raises(InvalidColor):
        DeficiencyVector.parse("2,x,0")
    with pytest.raises(InvalidColor):
        DeficiencyVector((1, -1))


def test_k3_has_thirteen_colorings(k3):
    assert len(list(enumerate_all(k3, DV_200))) == 13
    assert len(valid_pinnings(k3, (1, 2, 3))) == 13


def test_k4_needs_a_defect(k4):
    assert solve(ExtensionProblem(k4, DeficiencyVector((0, 0, 0)))) is None
    found = solve(ExtensionProblem(k4, DV_200))
    assert found is not None and is_valid(k4, DV_200, found)


def test_cube_colors_properly(cube):
    found = solve(ExtensionProblem(cube, DeficiencyVector((0, 0, 0))))
    assert found is not None
    assert all(vertex_status(cube, found, v).kind == "proper" for v in cube.vertices())


def test_validate_reports_violations(k3):
    bad = validate(k3, DV_200, {1: 2, 2: 2, 3: 1})
    assert [v.vertex for v in bad] == [1, 2]
    with pytest.raises(PartialAssignment):
        validate(k3, DV_200, {1: 1})
    with pytest.raises(InvalidColor):
        validate(k3, DV_200, {1: 1, 2: 1, 3: 4})


def test_vertex_status_kinds(p3):
    all_ones = {1: 1, 2: 1, 3: 1}
    assert vertex_status(p3, all_ones, 2).kind == "saturated"
    assert vertex_status(p3, all_ones, 1).kind == "nice"
    assert vertex_status(p3, {1: 2, 2: 2, 3: 1}, 1).kind == "violation"


def test_pins_are_respected(cube):
    found = solve(ExtensionProblem(cube, DV_200, {1: 2, 7: 2}))
    assert found[1] == 2 and found[7] == 2


def test_invalid_pins_rejected(k3):
    with pytest.raises(InvalidPin):
        solve(ExtensionProblem(k3, DV_200, {1: 2, 2: 2}))
    with pytest.raises(InvalidPin):
        solve(ExtensionProblem(k3, DV_200, {9: 1}))


def test_enumeration_cap(cube):
    with pytest.raises(TooLarge):
        list(enumerate_all(cube, DV_200, cap=7))


def test_superextension_of_bare_triangle(k3):
    pin = {1: 1, 2: 1, 3: 1}
    assert superextend(k3, (1, 2, 3), pin) == pin


def test_superextension_keeps_inner_vertex_distinct(k4):
    for pin in valid_pinnings(k4, (1, 2, 3)):
        found = superextend(k4, (1, 2, 3), pin)
        if found is not None:
            assert found[4] not in {pin[1], pin[2], pin[3]}
    assert superextend(k4, (1, 2, 3), {1: 1, 2: 2, 3: 3}) is None


def test_superextension_needs_triangle_or_heptagon(cube):
    with pytest.raises(BadCycleLength):
        superextend(cube, (1, 2, 3, 4), {1: 1, 2: 1, 3: 1, 4: 1})


def test_superextension_pin_must_cover_c0(k4):
    with pytest.raises(InvalidPin):
        superextend(k4, (1, 2, 3), {1: 1, 2: 1})


def test_samples_are_valid_and_seeded(cube):
    first = sample_colorings(cube, DV_200, 5, seed=7)
    again = sample_colorings(cube, DV_200, 5, seed=7)
    assert first == again
    assert len(first) == 5
    assert all(is_valid(cube, DV_200, s) for s in first)
    assert len({tuple(sorted(s.items())) for s in first}) == 5


def test_parse_pin():
    assert parse_pin("1=1, 2=3") == {1: 1, 2: 3}
    with pytest.raises(InvalidPin):
        parse_pin("1:1")


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL), st.sampled_from(VECTORS))
def test_solver_agrees_with_enumeration(graph, dv):
    found = solve(ExtensionProblem(graph, dv))
    exists = next(iter(enumerate_all(graph, dv)), None) is not None
    assert (found is not None) == exists
    if found is not None:
        assert is_valid(graph, dv, found)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL))
def test_swapping_independent_colors_keeps_validity(graph):
    found = solve(ExtensionProblem(graph, DV_200))
    if found is None:
        return
    swapped = {v: {2: 3, 3: 2}.get(c, c) for v, c in found.items()}
    assert is_valid(graph, DV_200, swapped)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL))
def test_larger_deficiency_keeps_validity(graph):
    found = solve(ExtensionProblem(graph, DeficiencyVector((1, 0, 0))))
    if found is not None:
        assert is_valid(graph, DV_200, found)
