# test_class_g.py

import math

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import drawn
from core.class_g import check_membership, closest_triangle_pair, is_member, triangles
from core.plane_graph import build_from_drawing
from corpus.enumerate import enumerate_small

SMALL = [g for n in range(3, 8) for g in enumerate_small(n)]


def test_cube_is_a_member(cube):
    report = check_membership(cube)
    assert report.is_member
    assert report.five_cycle_count == 0
    assert report.triangle_distance == math.inf
    assert report.to_lines()[0] == "MEMBER yes five_cycles=0 triangles=0 triangle_distance=inf"


def test_five_cycle_excludes(c5):
    report = check_membership(c5)
    assert not report.is_member
    assert report.has_5_cycle
    assert report.five_cycle_count == 1
    assert any(line.startswith("WITNESS 5-cycle") for line in report.to_lines())


def test_k4_triangles_touch(k4):
    report = check_membership(k4)
    assert not report.is_member
    assert report.triangle_distance == 0
    assert report.triangle_count == 4


def test_triangles_one_apart_are_allowed():
    g = drawn("bowtie_bar")
    report = check_membership(g)
    assert report.is_member
    assert report.triangle_distance == 1


def test_triangles_three_apart_are_allowed():
    coords = {1: (0, -3), 2: (0, 3), 3: (4, 0), 4: (8, 0), 5: (12, 0), 6: (16, 0), 7: (20, -3), 8: (20, 3)}
    edges = [(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 6)]
    report = check_membership(build_from_drawing(coords, edges))
    assert report.is_member
    assert report.triangle_count == 2
    assert report.triangle_distance == 3


def test_shared_vertex_is_distance_zero():
    distance, pair = closest_triangle_pair(drawn("bowtie"))
    assert distance == 0
    assert set(pair[0].vertices) & set(pair[1].vertices) == {3}


def test_single_triangle_has_infinite_distance(k3):
    assert closest_triangle_pair(k3) == (math.inf, None)
    assert is_member(k3)


def test_witness_cap_limits_listed_cycles(c5):
    assert check_membership(c5, cap=0).five_cycles == ()


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(SMALL))
def test_distance_one_means_disjoint_triangles(graph):
    tris = triangles(graph)
    disjoint = all(
        not set(a.vertices) & set(b.vertices)
        for i, a in enumerate(tris)
        for b in tris[i + 1:]
    )
    assert (closest_triangle_pair(graph)[0] >= 1) == disjoint
