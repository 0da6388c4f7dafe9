import networkx as nx
import pytest
from hypothesis import given, settings

from cleangraphs.fixtures import complement_cycle, cycle, g_k, jewel, line_wheel, short_prism
from cleangraphs.graph_core import Graph, build_graph
from cleangraphs.recognizers import (
    Hole,
    HoleNeighbourTag,
    ObstructionKind,
    SearchBudgetExceeded,
    chordal_elimination_order,
    classify_hole_neighbours,
    enumerate_holes,
    find_claw,
    find_clean_obstruction,
    find_jewel,
    find_line_wheel,
    find_seven_antihole,
    find_short_prism,
    find_simplicial_vertex,
    has_even_hole,
    is_hole,
    is_perfect_elimination_order,
    verify_obstruction,
)

import naive
from conftest import cycle_edges, graphs


def atlas():
    for G in nx.graph_atlas_g():
        yield build_graph(G.number_of_nodes(), G.edges())


ATLAS = list(atlas())  # every graph on at most 7 vertices, up to isomorphism


def test_hole_canonical_form():
    assert Hole.canonical([3, 2, 1, 0]).vertices == (0, 1, 2, 3)
    assert Hole.canonical([2, 5, 0, 4]).vertices == (0, 4, 2, 5)


# -- claws -------------------------------------------------------------------


def test_claw_examples(c6):
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    claw = find_claw(star)
    assert claw.roles == {"centre": 0, "leaves": (1, 2, 3)}
    assert find_claw(complement_cycle(7)) is None
    assert find_claw(c6) is None


def test_claw_agrees_with_naive_scan():
    for g in ATLAS:
        assert (find_claw(g) is not None) == naive.has_claw(g)


# -- holes -------------------------------------------------------------------


def test_hole_examples(c5):
    assert [h.vertices for h in enumerate_holes(c5)] == [(0, 1, 2, 3, 4)]
    k4 = build_graph(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert list(enumerate_holes(k4)) == []
    chorded = build_graph(6, cycle_edges(6) + [(0, 3)])
    assert {h.vertices for h in enumerate_holes(chorded)} == {(0, 1, 2, 3), (0, 3, 4, 5)}
    assert naive.hole_vertex_sets(chorded) == {frozenset({0, 1, 2, 3}), frozenset({0, 3, 4, 5})}


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_holes_match_brute_force(g):
    holes = list(enumerate_holes(g))
    sets = [frozenset(h.vertices) for h in holes]
    assert len(sets) == len(set(sets))
    assert set(sets) == naive.hole_vertex_sets(g)
    for h in holes:
        assert is_hole(g, h.vertices)
        assert Hole.canonical(h.vertices) == h


def test_hole_max_len_and_caps():
    g = cycle_square_free_two_holes()
    assert [len(h) for h in enumerate_holes(g, max_len=4)] == [4]
    with pytest.raises(SearchBudgetExceeded):
        list(enumerate_holes(g, limit=1))
    with pytest.raises(SearchBudgetExceeded):
        list(enumerate_holes(cycle(12), budget=3))
    assert len(list(enumerate_holes(g, limit=2))) == 2


def cycle_square_free_two_holes() -> Graph:
    # a 4-hole 0-1-2-3 and a 5-hole 4..8 joined by the edge 3-4
    edges = cycle_edges(4) + [(4 + a, 4 + b) for a, b in cycle_edges(5)] + [(3, 4)]
    return build_graph(9, edges)


def test_even_hole_examples(c4):
    assert has_even_hole(c4).vertices == (0, 1, 2, 3)
    assert has_even_hole(cycle(7)) is None
    assert has_even_hole(g_k(3)) is None


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=8))
def test_even_hole_iff_some_hole_even(g):
    expect = any(len(s) % 2 == 0 for s in naive.hole_vertex_sets(g))
    found = has_even_hole(g)
    assert (found is not None) == expect
    if found is not None:
        assert is_hole(g, found.vertices) and len(found) % 2 == 0


# -- chordality ----------------------------------------------------------------


def test_chordal_examples(c4):
    k3 = build_graph(3, [(0, 1), (0, 2), (1, 2)])
    assert sorted(chordal_elimination_order(k3)) == [0, 1, 2]
    assert chordal_elimination_order(c4) == Hole((0, 1, 2, 3))
    p4 = build_graph(4, [(0, 1), (1, 2), (2, 3)])
    order = chordal_elimination_order(p4)
    assert order[0] in (0, 3) and is_perfect_elimination_order(p4, order)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_chordal_iff_holeless(g):
    out = chordal_elimination_order(g)
    holes = list(enumerate_holes(g))
    if isinstance(out, Hole):
        assert holes and is_hole(g, out.vertices)
    else:
        assert not holes and is_perfect_elimination_order(g, out)


def test_chordal_agrees_with_networkx():
    for g in ATLAS:
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges())
        assert (not isinstance(chordal_elimination_order(g), Hole)) == nx.is_chordal(G)


def test_simplicial_vertex_examples(c5):
    assert find_simplicial_vertex(build_graph(4, [(0, 1), (1, 2), (2, 3)])) == 0
    assert find_simplicial_vertex(c5) is None
    assert find_simplicial_vertex(build_graph(1, [])) == 0


# -- clean obstructions ---------------------------------------------------------


def test_obstruction_examples(c6):
    obs = find_clean_obstruction(complement_cycle(7))
    assert obs.kind is ObstructionKind.SEVEN_ANTIHOLE and obs.vertices == set(range(7))
    assert find_clean_obstruction(c6) is None
    apex = build_graph(6, cycle_edges(5) + [(5, 0), (5, 1), (5, 2), (5, 3)])
    assert find_clean_obstruction(apex).kind is ObstructionKind.JEWEL


@pytest.mark.parametrize(
    "fixture, kind",
    [
        (jewel(4), ObstructionKind.JEWEL),
        (jewel(5), ObstructionKind.JEWEL),
        (jewel(7), ObstructionKind.JEWEL),
        (line_wheel(6, 4), ObstructionKind.LINE_WHEEL),
        (line_wheel(8, 4), ObstructionKind.LINE_WHEEL),
        (line_wheel(8, 6), ObstructionKind.LINE_WHEEL),
        (short_prism(2), ObstructionKind.SHORT_PRISM),
        (short_prism(4), ObstructionKind.SHORT_PRISM),
    ],
)
def test_obstruction_fixtures_detected(fixture, kind):
    obs = find_clean_obstruction(fixture.graph)
    assert obs.kind is kind
    assert verify_obstruction(fixture.graph, obs)


def test_short_prism_single_vertex_is_a_jewel_first():
    g = short_prism(1).graph
    assert find_short_prism(g).roles["path"] == (4,)
    assert find_clean_obstruction(g).kind is ObstructionKind.JEWEL


FINDERS = {
    "claw": find_claw,
    "jewel": find_jewel,
    "line wheel": find_line_wheel,
    "short prism": find_short_prism,
    "seven-antihole": find_seven_antihole,
}


@pytest.mark.parametrize("kind", sorted(FINDERS))
def test_each_kind_agrees_with_naive_search(kind):
    finder = FINDERS[kind]
    for g in ATLAS:
        obs = finder(g)
        assert (obs is not None) == naive.contains_kind(g, kind), (kind, g)
        if obs is not None:
            assert verify_obstruction(g, obs)


def test_clean_agrees_with_naive_search():
    for g in ATLAS:
        expect = not any(naive.contains_kind(g, k) for k in FINDERS)
        assert (find_clean_obstruction(g) is None) == expect


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=9))
def test_obstructions_are_sound(g):
    obs = find_clean_obstruction(g)
    if obs is not None:
        assert verify_obstruction(g, obs)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=9))
def test_claw_free_even_hole_free_implies_clean(g):
    if find_claw(g) is None and has_even_hole(g) is None:
        assert find_clean_obstruction(g) is None


def test_budget_exhaustion_is_reported():
    with pytest.raises(SearchBudgetExceeded):
        find_clean_obstruction(cycle(10), budget=2)


# -- hole neighbours -----------------------------------------------------------


def test_classify_examples(c5):
    wheel = build_graph(6, cycle_edges(5) + [(5, v) for v in range(5)])
    assert classify_hole_neighbours(wheel, (0, 1, 2, 3, 4), 5).tag is HoleNeighbourTag.COMPLETE_TO_C5
    iso = build_graph(7, cycle_edges(6))
    assert classify_hole_neighbours(iso, range(6), 6).tag is HoleNeighbourTag.ANTICOMPLETE
    bad = build_graph(7, cycle_edges(6) + [(6, 0), (6, 2)])
    out = classify_hole_neighbours(bad, range(6), 6)
    assert out.tag is HoleNeighbourTag.VIOLATION and out.detail == (0, 2)
    assert find_clean_obstruction(bad) is not None


def test_classify_two_and_three():
    g = build_graph(8, cycle_edges(6) + [(6, 2), (6, 3), (7, 0), (7, 1), (7, 5)])
    assert classify_hole_neighbours(g, range(6), 6).tag is HoleNeighbourTag.TWO_CONSECUTIVE
    out = classify_hole_neighbours(g, range(6), 7)
    assert out.tag is HoleNeighbourTag.THREE_CONSECUTIVE and out.detail == (0, 1, 5)


def test_classify_rejects_bad_input(c5):
    with pytest.raises(ValueError):
        classify_hole_neighbours(c5, range(5), 0)
    with pytest.raises(ValueError):
        classify_hole_neighbours(c5, (0, 1, 2), 3)


@settings(max_examples=300, deadline=None)
@given(graphs(min_n=5, max_n=9))
def test_clean_graphs_never_violate_hole_neighbours(g):
    if find_clean_obstruction(g) is not None:
        return
    for h in enumerate_holes(g):
        for v in range(g.n):
            if v not in h.vertices:
                assert classify_hole_neighbours(g, h, v).tag is not HoleNeighbourTag.VIOLATION
