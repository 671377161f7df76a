# test_corpus.py

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from core.discharging import initial_charges
from core.plane_graph import build_from_drawing, build_from_rotation
from corpus.enumerate import enumerate_small, enumerate_up_to
from corpus.planar_code import (
    HEADER,
    decode_record,
    parse_planar_code,
    read_planar_code,
    write_planar_code,
)
from corpus.rotlist import emit_rotlist, parse_rotlist, parse_rotlists
from corpus.sketch import sketches
from corpus.sweep import CorpusRecord, evaluate, sweep
from utils.errors import (
    BadHeader,
    GraphError,
    InvalidRotation,
    RotlistSyntaxError,
    SweepIoError,
    TooLarge,
    TruncatedRecord,
)

K3_ROTLIST = "n 3 outer 1 2\n1: 2 3\n2: 3 1\n3: 1 2\n"


# ─── rotlist ───────────────────────────────────────────────────────────────
def test_parse_triangle():
    g = parse_rotlist(K3_ROTLIST)
    assert g.vertex_count == 3
    assert g.outer_edge == (1, 2)
    assert g.rotation(2) == (3, 1)


def test_cube_round_trip(cube):
    assert parse_rotlist(emit_rotlist(cube)) == cube


def test_comments_and_blank_lines_are_skipped():
    g = parse_rotlist("# triangle\n\n" + K3_ROTLIST)
    assert g.edge_count == 3


def test_single_vertex_has_no_outer_edge():
    g = build_from_rotation(1, {1: ()})
    assert emit_rotlist(g) == "n 1\n1:\n"
    assert parse_rotlist(emit_rotlist(g)).vertex_count == 1


@pytest.mark.parametrize(
    "text, line",
    [
        ("n 3 outer 1 2\n1: 2 2 3\n2: 3 1\n3: 1 2\n", 2),
        ("n 3 outer 1 2\n1: 2 3\n1: 3 1\n3: 1 2\n", 3),
        ("n 3 outer 1 2\n1: 2 3\n2: 3 x\n3: 1 2\n", 3),
        ("n 3 outer 1 2\n1: 2 3\n2: 3 1\n", 3),
        ("n 3 outer 1\n1: 2 3\n2: 3 1\n3: 1 2\n", 1),
        ("n 3 outer 1 2\n1 2 3\n2: 3 1\n3: 1 2\n", 2),
        ("", 1),
    ],
)
def test_rotlist_syntax_errors_carry_line(text, line):
    with pytest.raises(RotlistSyntaxError) as e:
        parse_rotlist(text)
    assert e.value.line == line


def test_rotlist_rejects_invalid_embeddings():
    with pytest.raises(RotlistSyntaxError):
        parse_rotlist("n 4 outer 1 2\n1: 2 3 4\n2: 1 3 4\n3: 1 2 4\n4: 1 2 3\n")


def test_several_rotlists_in_one_text(cube, k3):
    text = emit_rotlist(cube) + "\n" + emit_rotlist(k3)
    assert list(parse_rotlists(text)) == [cube, k3]


def test_error_line_counts_from_the_start_of_the_file(k3):
    text = emit_rotlist(k3) + "n 3 outer 1 2\n1: 2 3\n2: 3 1\n3: 1 1\n"
    with pytest.raises(RotlistSyntaxError) as e:
        list(parse_rotlists(text))
    assert e.value.line == 8


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([g for n in range(1, 7) for g in enumerate_small(n)]))
def test_rotlist_round_trip(graph):
    assert parse_rotlist(emit_rotlist(graph)) == graph


# ─── planar_code ───────────────────────────────────────────────────────────
def test_triangle_record():
    data = HEADER + bytes([3, 2, 3, 0, 1, 3, 0, 1, 2, 0])
    (g,) = parse_planar_code(data)
    assert g.vertex_count == 3
    assert g.rotation(1) == (2, 3)


def test_empty_body():
    assert list(parse_planar_code(HEADER)) == []


def test_bad_header():
    with pytest.raises(BadHeader):
        list(parse_planar_code(b">>graph6<<"))


def test_truncated_record():
    with pytest.raises(TruncatedRecord):
        list(parse_planar_code(HEADER + bytes([3, 2, 3, 0, 1, 3])))


def test_invalid_record_is_skipped():
    bad = bytes([4, 2, 3, 4, 0, 1, 3, 4, 0, 1, 2, 4, 0, 1, 2, 3, 0])
    good = bytes([3, 2, 3, 0, 1, 3, 0, 1, 2, 0])
    graphs = list(parse_planar_code(HEADER + bad + good))
    assert [g.vertex_count for g in graphs] == [3]


def test_inconsistent_rotation_is_an_invalid_rotation():
    rotation = {1: (2, 3, 4), 2: (1, 3, 4), 3: (1, 2, 4), 4: (1, 2, 3)}
    with pytest.raises(InvalidRotation, match="record 7") as e:
        decode_record(4, rotation, 7)
    assert isinstance(e.value.__cause__, GraphError)


def test_writer_round_trip(tmp_path):
    graphs = list(enumerate_small(5))
    path = tmp_path / "five.pc"
    path.write_bytes(write_planar_code(graphs))
    assert [g.rotation_lists() for g in read_planar_code(path)] == [g.rotation_lists() for g in graphs]


# ─── Enumeration ───────────────────────────────────────────────────────────
@pytest.mark.parametrize("n, count", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 20), (6, 99)])
def test_connected_planar_counts(n, count):
    assert len(list(enumerate_small(n))) == count


def test_up_to_chains_orders():
    assert len(list(enumerate_up_to(4))) == 1 + 1 + 2 + 6


def test_enumeration_limit():
    with pytest.raises(TooLarge):
        list(enumerate_small(9))


def test_enumerated_graphs_are_pairwise_non_isomorphic():
    graphs = [g.to_networkx() for g in enumerate_small(5)]
    for i, a in enumerate(graphs):
        assert all(not nx.is_isomorphic(a, b) for b in graphs[i + 1:])
        assert nx.is_connected(a) and nx.check_planarity(a)[0]


def test_k4_is_in_the_four_vertex_universe():
    assert any(g.edge_count == 6 for g in enumerate_small(4))


# ─── Sweep ─────────────────────────────────────────────────────────────────
def test_cube_sweep_record(cube):
    record = evaluate((0, cube, ("membership", "color_200")))
    assert isinstance(record, CorpusRecord)
    assert record.to_line() == "RECORD 0 membership=yes color_200=SAT"


def test_non_member_skips_later_checks(c5):
    record = evaluate((4, c5, ("membership", "color_200", "discharge_audit")))
    assert record.verdicts == {"membership": "no", "color_200": "skip", "discharge_audit": "skip"}


def test_triangle_superextends_under_every_pin(k3):
    record = evaluate((0, k3, ("superextend_all_triangles",)))
    assert record.verdicts["superextend_all_triangles"] == "13/13"


def test_sweep_writes_records_and_summary(tmp_path):
    out = tmp_path / "sweep.out"
    records, summary = sweep(enumerate_up_to(5), output=str(out), workers=1)
    lines = out.read_text().splitlines()
    assert [r.index for r in records] == list(range(len(records)))
    assert lines[0].startswith("RECORD 0 ")
    written = (tmp_path / "sweep.out.summary").read_text().splitlines()
    assert written == summary
    assert summary[0].startswith("# sweep ")
    assert summary[1].startswith(f"TOTAL {len(records)} MEMBERS ")
    assert " UNSAT 0 " in summary[1]
    assert summary[2].startswith("MATCHES P3.1a ")


def test_sweep_output_is_reproducible(tmp_path):
    runs = []
    for name, workers in (("a", 1), ("b", 1), ("c", 2)):
        out = tmp_path / name
        sweep(enumerate_up_to(5), ["membership", "color_200", "lemma_scan"], str(out), workers)
        runs.append((out.read_bytes(), (tmp_path / f"{name}.summary").read_bytes()))
    assert runs[0] == runs[1] == runs[2]


def test_sweep_io_error(tmp_path, k3):
    with pytest.raises(SweepIoError):
        sweep([k3], ["membership"], str(tmp_path / "missing" / "out"))


def test_heptagon_superextends_under_sampled_pins(drawing):
    coords = {1: (0, 10), 2: (8, 6), 3: (10, -2), 4: (4, -9), 5: (-4, -9), 6: (-10, -2), 7: (-8, 6)}
    heptagon = build_from_drawing(coords, [(i, i % 7 + 1) for i in range(1, 8)])
    record = evaluate((0, heptagon, ("superextend_seven_cycles",)))
    assert record.verdicts["superextend_seven_cycles"] == "128/128"
    assert evaluate((0, drawing("k4"), ("superextend_seven_cycles",))).verdicts == {
        "superextend_seven_cycles": "none"
    }


@pytest.mark.slow
def test_every_member_up_to_eight_colors_and_superextends(tmp_path):
    checks = ["membership", "color_200", "superextend_all_triangles", "superextend_seven_cycles"]
    records, summary = sweep(enumerate_up_to(8), checks, str(tmp_path / "eight"), workers=2)
    members = [r for r in records if r.verdicts["membership"] == "yes"]
    assert members
    assert " UNSAT 0 " in summary[1]
    assert all(r.verdicts["color_200"] == "SAT" for r in members)
    for r in members:
        for check in checks[2:]:
            verdict = r.verdicts[check]
            if verdict != "none":
                ok, total = verdict.split("/")
                assert ok == total, (r.index, check)
    assert any(r.verdicts["superextend_seven_cycles"] != "none" for r in members)


# ─── Lattice sketches ──────────────────────────────────────────────────────
def test_sketches_are_seeded():
    first = [g.rotation_lists() for g in sketches(20, seed=3)]
    assert first == [g.rotation_lists() for g in sketches(20, seed=3)]
    assert first != [g.rotation_lists() for g in sketches(20, seed=4)]


@pytest.mark.parametrize("side", [1, 16])
def test_sketch_side_outside_range(side):
    with pytest.raises(TooLarge):
        next(sketches(1, max_side=side))


@pytest.mark.slow
def test_thousand_sketches_ingest_through_planar_code(tmp_path):
    path = tmp_path / "sketches.pc"
    path.write_bytes(write_planar_code(sketches(1000)))
    graphs = read_planar_code(path)
    assert len(graphs) == 1000
    assert max(g.vertex_count for g in graphs) <= 64
    for g in graphs:
        assert g.vertex_count - g.edge_count + len(g.faces) == 2
        assert nx.is_connected(g.to_networkx())
        assert initial_charges(g).initial_sum() == 0
