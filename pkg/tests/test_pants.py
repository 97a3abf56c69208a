from dataclasses import replace

import pytest

from helpers import pants_catalog
from relweight.pants import (
    BOUNDARY,
    INTERNAL,
    AMoveError,
    PantsGraph,
    SpanChanged,
    a_move,
    a_move_neighbors,
    a_move_reachable,
    canonical_form,
    candidate_classes,
    dumbbell_graph,
    graph_from_ends,
    handlebody_invariant,
    homology_neutral_edit,
    theta_graph,
    validate,
)
from relweight.surface import CurveSystem, SurfaceModel

B = [[0, 0, 1, 0], [0, 0, 0, 1]]


def test_theta_and_dumbbell_are_valid():
    theta = theta_graph()
    assert validate(theta) and theta.betti() == 2
    assert sorted(theta.classes()) == [(0, 1, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0)]
    dumbbell = dumbbell_graph()
    assert validate(dumbbell) and dumbbell.betti() == 2


def test_count_mismatch_is_reported():
    v = validate(theta_graph(), g=3)
    assert not v and "counts" in v.message


def test_broken_graphs_are_invalid():
    theta = theta_graph()
    v = validate(replace(theta, edges=theta.edges[:-1]))
    assert not v and "valence" in v.message
    whites = tuple(replace(w, cls=(2, 0, 0, 0)) if w.id == "u" else w for w in theta.whites)
    v = validate(replace(theta, whites=whites))
    assert not v and "primitive" in v.message


def test_wrong_classes_are_invalid():
    pg = PantsGraph.build(2, 0, ["p", "q"],
                          [("u", INTERNAL, [1, 0, 0, 0]), ("v", INTERNAL, [0, 0, 1, 0]),
                           ("w", INTERNAL, [1, 0, 1, 0])],
                          [("p", "u"), ("p", "v"), ("p", "w"), ("q", "u"), ("q", "v"), ("q", "w")])
    v = validate(pg)
    assert not v and "intersect" in v.message
    pg = PantsGraph.build(2, 0, ["p", "q"],
                          [("u", INTERNAL, [1, 0, 0, 0]), ("v", INTERNAL, [0, 1, 0, 0]),
                           ("w", INTERNAL, [1, 0, 0, 0])],
                          [("p", "u"), ("p", "v"), ("p", "w"), ("q", "u"), ("q", "v"), ("q", "w")])
    v = validate(pg)
    assert not v and "pants relation" in v.message


def test_graph_with_boundary():
    # genus 1 with one boundary: one pants, a loop and a boundary leg
    pg = graph_from_ends(1, {"l": ["A", "A"], "d": ["A"]})
    assert validate(pg)
    assert pg.boundary == 1 and pg.white("d").kind == BOUNDARY
    assert pg.white("l").cls == (1, 0)


def test_a_move_dumbbell_to_theta():
    dumbbell = dumbbell_graph()
    # both sums are allowed; the reference theta carries a1 + a2
    assert candidate_classes(dumbbell, "w", 0) == [(1, -1, 0, 0), (1, 1, 0, 0)]
    moved = a_move(dumbbell, "w", 0, (1, 1, 0, 0))
    assert validate(moved)
    assert canonical_form(moved) == canonical_form(theta_graph())
    back = a_move(moved, "w", 0, (0, 0, 0, 0))
    assert validate(back)
    assert canonical_form(back) == canonical_form(dumbbell)


def test_a_move_rejects_loop_white():
    with pytest.raises(AMoveError):
        a_move(dumbbell_graph(), "u", 0, (1, 0, 0, 0))


def test_a_move_rejects_bad_class():
    with pytest.raises(AMoveError):
        a_move(dumbbell_graph(), "w", 0, (0, 0, 1, 0))


def test_moves_preserve_the_invariant():
    for name, pg in pants_catalog().items():
        inv = handlebody_invariant(pg)
        for nb in a_move_neighbors(pg):
            assert validate(nb), name
            assert nb.betti() == pg.genus
            assert handlebody_invariant(nb) == inv, name


def test_invariants_of_examples():
    theta, dumbbell = theta_graph(), dumbbell_graph()
    assert handlebody_invariant(theta) == handlebody_invariant(dumbbell)
    assert handlebody_invariant(theta).span.dim == 2
    assert handlebody_invariant(theta_graph(B)) != handlebody_invariant(theta)


def test_reachability():
    theta, dumbbell = theta_graph(), dumbbell_graph()
    assert a_move_reachable(theta, theta, 0).moves == 0
    r = a_move_reachable(dumbbell, theta, 3)
    assert r.reachable and r.moves == 1 and r.status == "reachable"
    r = a_move_reachable(theta, theta_graph(B), 4)
    assert not r.reachable and r.status == "not_within_bound"


def test_homology_neutral_edits():
    s = SurfaceModel(2)
    cs = CurveSystem.build(s, [s.a(1)], ["x"])
    assert len(homology_neutral_edit(s, cs, insert=("y", s.a(1)))) == 2
    assert len(homology_neutral_edit(s, cs, insert=("z", [0, 0, 0, 0]))) == 2
    with pytest.raises(ValueError):
        homology_neutral_edit(s, cs, insert=("b", s.b(1)))
    with pytest.raises(SpanChanged):
        homology_neutral_edit(s, cs, insert=("b", s.b(2)))
    with pytest.raises(SpanChanged):
        homology_neutral_edit(s, cs, delete="x")
    two = CurveSystem.build(s, [s.a(1), s.a(1)], ["x", "y"])
    assert homology_neutral_edit(s, two, delete="y").labels == ("x",)
