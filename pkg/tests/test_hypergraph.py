import itertools

import pytest
from hypothesis import given, settings

from linspect.cliques import chromatic_number, clique_number
from linspect.constructions import near_pencil
from linspect.graph import complete_graph, cycle_graph, empty_graph, is_isomorphic, path_graph
from linspect.hypergraph import (
    HypergraphError,
    L1Violation,
    L2Violation,
    chromatic_index,
    clique_index,
    dual_realization,
    fano_plane,
    intersection_graph,
    intersection_points,
    is_intersecting,
    is_line_coloring,
    normalize,
    validate,
)

from test_graph import graphs

NEAR_PENCIL_4 = [{0, 1, 2}, {0, 3}, {1, 3}, {2, 3}]


def test_validate_examples():
    # Pairwise intersections of the near-pencil on 4 points, by hand:
    # {0,1,2}&{0,3}={0}, {0,1,2}&{1,3}={1}, {0,1,2}&{2,3}={2}, the pencil lines meet in {3}.
    h = validate(NEAR_PENCIL_4)
    assert (h.v, h.b) == (4, 4)
    with pytest.raises(L1Violation) as exc:
        validate([{0, 1, 2}, {0, 1, 3}])
    assert exc.value.points == (0, 1) and exc.value.lines == (0, 1)
    with pytest.raises(L2Violation) as exc:
        validate([{5}])
    assert exc.value.line == 0
    with pytest.raises(L2Violation):
        validate([{0, 1}, set()])
    with pytest.raises(HypergraphError):
        validate([{0, 4}], num_points=3)


def test_validate_reports_first_violation_deterministically():
    with pytest.raises(L1Violation) as exc:
        validate([{0, 1}, {2, 3, 4}, {0, 1, 5}, {2, 3, 5}])
    assert exc.value.lines == (0, 2)


def test_intersection_graph_examples():
    for n in range(3, 9):
        assert intersection_graph(near_pencil(n)) == complete_graph(n)
    disjoint = validate([{0, 1}, {2, 3}, {4, 5}])
    assert intersection_graph(disjoint) == empty_graph(3)
    assert intersection_graph(fano_plane()) == complete_graph(7)


def test_intersection_points_unique_and_pencils_are_cliques():
    h = fano_plane()
    pts = intersection_points(h)
    assert len(pts) == 21
    g = intersection_graph(h)
    for p in range(h.v):
        assert g.is_clique(h.pencil(p))


def test_dual_realization_examples():
    h = dual_realization(path_graph(3))
    assert (h.v, h.b) == (4, 3)
    h = dual_realization(empty_graph(1))
    assert (h.v, h.b) == (2, 1)
    h = dual_realization(complete_graph(3))
    assert (h.v, h.b) == (3, 3)
    assert all(len(line) == 2 for line in h.lines)


@settings(max_examples=80)
@given(graphs(max_n=8))
def test_dual_realization_round_trip(g):
    h = dual_realization(g)
    validate(h.lines, h.v)
    assert intersection_graph(h) == g
    assert sum(h.line_sizes()) == sum(h.point_degree(p) for p in range(h.v))


def test_chromatic_index_examples():
    for n in range(3, 8):
        k, col = chromatic_index(near_pencil(n))
        assert k == n == chromatic_number(complete_graph(n))
        assert is_line_coloring(near_pencil(n), col)
    assert chromatic_index(validate([{0, 1}, {2, 3}, {4, 5}]))[0] == 1
    k, col = chromatic_index(fano_plane())
    assert k == 7 and is_line_coloring(fano_plane(), col)


def test_is_intersecting_examples():
    h = near_pencil(6)
    assert is_intersecting(h) and h.b == h.v
    assert not is_intersecting(validate([{0, 1}, {2, 3}]))
    f = fano_plane()
    assert is_intersecting(f) and f.b == f.v == 7


def test_clique_index_examples():
    assert clique_index(near_pencil(5)) == 5
    assert clique_index(validate([{0, 1}, {2, 3}])) == 1
    assert clique_index(dual_realization(cycle_graph(5))) == 2


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_clique_index_equals_clique_number(g):
    h = dual_realization(g)
    assert clique_index(h) == clique_number(intersection_graph(h))


def test_normalize_strips_isolated_points():
    h = validate([{0, 3}, {3, 5}], num_points=7)
    norm, index = normalize(h)
    assert norm.v == 3 and index == {0: 0, 3: 1, 5: 2}
    assert intersection_graph(norm) == intersection_graph(h)


def test_intersecting_families_satisfy_b_le_v():
    # Every sub-family of the Fano plane's lines is intersecting.
    f = fano_plane()
    for k in range(1, 8):
        for sub in itertools.combinations(f.lines, k):
            h = validate(sub, 7)
            assert is_intersecting(h)
            norm, _ = normalize(h)
            assert norm.b <= norm.v
