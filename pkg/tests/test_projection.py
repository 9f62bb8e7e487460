from itertools import permutations
from math import comb, factorial, perm

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from hyperlap import (
    Hypergraph,
    TupleIndex,
    build_directed,
    build_projection,
    build_weighted,
    complete_hypergraph,
    random_hypergraph,
    set_degree,
)
from hyperlap.projection import expected_degree, expected_volume

from oracles import arc_by_definition, weight_by_definition


def test_tuple_index_basics():
    idx = TupleIndex(6, 1)
    assert len(idx) == 6
    assert [idx.tuple_of_index(k) for k in range(6)] == [(k,) for k in range(6)]
    idx2 = TupleIndex(6, 2)
    assert len(idx2) == 30
    assert idx2.tuples == sorted(idx2.tuples)
    for i in range(len(idx2)):
        assert idx2.index_of_tuple(idx2.tuple_of_index(i)) == i


@pytest.mark.parametrize("bad", [(0, 0), (0, 6), (1,), (0, 1, 2)])
def test_tuple_index_rejects(bad):
    with pytest.raises(ValueError):
        TupleIndex(6, 2).index_of_tuple(bad)


def test_tuple_index_range():
    with pytest.raises(IndexError):
        TupleIndex(6, 2).tuple_of_index(30)
    with pytest.raises(IndexError):
        TupleIndex(6, 2).tuple_of_index(-1)


def test_weighted_examples():
    G = build_weighted(complete_hypergraph(6, 3), 1)
    assert G.weights[0, 1] == 4
    G4 = build_weighted(complete_hypergraph(6, 4), 2)
    ix = G4.index.index_of_tuple
    assert G4.weights[ix((0, 1)), ix((1, 2))] == 0
    assert G4.weights[ix((0, 1)), ix((2, 3))] == 1


def test_directed_examples(k63):
    D = build_directed(k63, 2)
    ix = D.index.index_of_tuple
    assert D.adjacency[ix((0, 1)), ix((1, 2))] == 1
    assert D.adjacency[ix((0, 1)), ix((2, 3))] == 0
    assert D.out_degrees[ix((0, 1))] == 4


@pytest.mark.parametrize("r, s", [(3, 0), (3, 2), (4, 3)])
def test_weighted_rejects_s(r, s):
    with pytest.raises(ValueError):
        build_weighted(complete_hypergraph(6, r), s)


@pytest.mark.parametrize("r, s", [(3, 1), (4, 2), (4, 4)])
def test_directed_rejects_s(r, s):
    with pytest.raises(ValueError):
        build_directed(complete_hypergraph(6, r), s)


def test_boundary_s_is_weighted():
    P = build_projection(complete_hypergraph(6, 4), 2)
    assert not P.directed


def test_triplets_export(k63):
    G = build_weighted(k63, 1)
    lines = G.to_triplets().splitlines()
    assert lines[0] == "# dim 6"
    assert len(lines) == 1 + 30
    i, j, v = lines[1].split()
    assert (int(i), int(j), float(v)) == (0, 1, 4.0)


hypergraphs = st.builds(
    random_hypergraph,
    n=st.integers(5, 7),
    r=st.integers(2, 5),
    p=st.sampled_from([0.2, 0.5, 1.0]),
    seed=st.integers(0, 10**6),
).filter(lambda H: H.r <= H.n)


@settings(max_examples=25, deadline=None)
@given(H=hypergraphs)
def test_projection_matches_definition(H):
    for s in range(1, H.r):
        if perm(H.n, s) > 220:
            continue
        P = build_projection(H, s)
        assert P.size == perm(H.n, s)
        oracle = arc_by_definition if P.directed else weight_by_definition
        A = np.array([[oracle(H, x, y) for y in P.index] for x in P.index])
        assert np.array_equal(A, P.adjacency)


@settings(max_examples=30, deadline=None)
@given(H=hypergraphs)
def test_degrees_and_volume(H):
    for s in range(1, H.r):
        P = build_projection(H, s)
        for i, x in enumerate(P.index):
            assert P.degrees[i] == expected_degree(H, s, set_degree(H, x))
        assert P.volume == expected_volume(H, s) == P.adjacency.sum()
        if P.directed:
            assert P.volume == H.num_edges * factorial(H.r)
            assert np.array_equal(P.out_degrees, P.in_degrees)
        else:
            assert np.array_equal(P.adjacency, P.adjacency.T)
            assert P.volume == H.num_edges * factorial(H.r) // factorial(H.r - 2 * s)
            assert np.all(np.diag(P.adjacency) == 0)


def test_complete_projection_regular():
    for n, r in [(6, 3), (7, 4), (6, 5)]:
        H = complete_hypergraph(n, r)
        for s in range(1, r):
            P = build_projection(H, s)
            d = expected_degree(H, s, comb(n - s, r - s))
            assert np.all(P.degrees == d)
            assert P.min_degree == d


def test_single_edge_degrees():
    H = Hypergraph(5, 3, ((0, 1, 2),))
    D = build_directed(H, 2)
    ix = D.index.index_of_tuple
    assert D.degrees[ix((0, 1))] == 1
    assert D.degrees[ix((3, 4))] == 0
    assert D.volume_of([ix((0, 1)), ix((2, 0))]) == 2


def test_lift_of_sets():
    idx = TupleIndex(5, 2)
    ids = idx.indices_of_sets([(0, 1), (3, 2)])
    assert sorted(idx.tuple_of_index(i) for i in ids) == [(0, 1), (1, 0), (2, 3), (3, 2)]


def test_directed_arc_count_per_edge():
    # every s-ordering of every edge yields (r-s)! out-arcs
    H = random_hypergraph(7, 5, 0.4, seed=3)
    D = build_directed(H, 3)
    assert D.adjacency.sum() == H.num_edges * perm(5, 3) * factorial(2)
    for e in H.edges[:3]:
        for x in permutations(e, 3):
            assert D.out_degrees[D.index.index_of_tuple(x)] == set_degree(H, x) * 2
