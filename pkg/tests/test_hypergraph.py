from itertools import combinations
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from hyperlap import (
    Hypergraph,
    HypergraphFormatError,
    complete_hypergraph,
    neighborhood,
    parse_hypergraph,
    random_hypergraph,
    read_hypergraph,
    serialize_hypergraph,
    set_degree,
    write_hypergraph,
)


def test_complete_counts():
    H = complete_hypergraph(7, 4)
    assert H.num_edges == comb(7, 4)
    # every s-set of K_n^r lies in C(n-s, r-s) edges
    for s in range(4):
        for S in [tuple(range(s)), (6, 2, 4)[:s]]:
            assert set_degree(H, S) == comb(7 - s, 4 - s)


def test_edges_canonical_and_sorted():
    H = Hypergraph(5, 3, ((4, 0, 2), (1, 0, 2)))
    assert H.edges == ((0, 1, 2), (0, 2, 4))
    assert H.has_edge({2, 4, 0})
    assert not H.has_edge((0, 1, 3))


@pytest.mark.parametrize("edges, msg", [
    (((0, 1),), "distinct"),
    (((0, 0, 1),), "distinct"),
    (((0, 1, 5),), "outside"),
    (((0, 1, 2), (2, 1, 0)), "duplicate"),
])
def test_invalid_edges(edges, msg):
    with pytest.raises(ValueError, match=msg):
        Hypergraph(5, 3, edges)


def test_neighborhood_example():
    H = Hypergraph(6, 3, ((0, 1, 2), (0, 1, 3), (0, 4, 5)))
    assert neighborhood(H, (1, 0)) == [(2,), (3,)]
    assert neighborhood(H, (0,)) == [(1, 2), (1, 3), (4, 5)]
    assert neighborhood(H, (5, 1)) == []
    assert set_degree(H, ()) == 3
    with pytest.raises(ValueError):
        set_degree(H, (0, 1, 2))
    with pytest.raises(ValueError):
        neighborhood(H, (0, 0))


def test_random_is_deterministic():
    a = random_hypergraph(7, 3, 0.4, seed=11)
    b = random_hypergraph(7, 3, 0.4, seed=11)
    c = random_hypergraph(7, 3, 0.4, seed=12)
    assert a == b
    assert a != c
    assert random_hypergraph(6, 3, 1.0, 0) == complete_hypergraph(6, 3)
    assert random_hypergraph(6, 3, 0.0, 0).num_edges == 0


def test_roundtrip(tmp_path):
    H = random_hypergraph(8, 4, 0.3, seed=5)
    assert parse_hypergraph(serialize_hypergraph(H)) == H
    path = tmp_path / "h.txt"
    write_hypergraph(H, path)
    assert read_hypergraph(path) == H


def test_parse_comments_and_blank_lines():
    H = parse_hypergraph("# demo\n\n5 3\n0 1 2\n  # mid\n4 3 2\n")
    assert H.edges == ((0, 1, 2), (2, 3, 4))


@pytest.mark.parametrize("text, line", [
    ("5 3\n0 1\n", 2),
    ("5 3\n0 1 2\n0 1 9\n", 3),
    ("5 3\n0 1 x\n", 2),
    ("5 3\n0 1 2\n2 0 1\n", 3),
    ("5\n", 1),
    ("5 3\n1 1 2\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(HypergraphFormatError) as info:
        parse_hypergraph(text)
    assert info.value.lineno == line


def test_parse_missing_header():
    with pytest.raises(HypergraphFormatError, match="header"):
        parse_hypergraph("# nothing\n")


@settings(max_examples=40, deadline=None)
@given(n=st.integers(5, 8), r=st.integers(2, 5), p=st.floats(0, 1), seed=st.integers(0, 2**31))
def test_degree_matches_definition(n, r, p, seed):
    if r > n:
        return
    H = random_hypergraph(n, r, p, seed)
    for s in range(1, r):
        for S in combinations(range(n), s):
            brute = sum(1 for e in H.edges if set(S) <= set(e))
            assert set_degree(H, S) == brute
            assert len(neighborhood(H, S)) == brute
        # double counting: sum of s-set degrees is |E| C(r, s)
        assert sum(H.degree_table(s).values()) == H.num_edges * comb(r, s)


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10**6), perm_seed=st.integers(0, 10**6))
def test_relabel_preserves_degrees(seed, perm_seed):
    import numpy as np
    H = random_hypergraph(6, 3, 0.5, seed)
    perm = np.random.default_rng(perm_seed).permutation(6)
    K = H.relabel(perm)
    assert K.num_edges == H.num_edges
    for S in combinations(range(6), 2):
        assert set_degree(K, [perm[v] for v in S]) == set_degree(H, S)


def test_spec_examples():
    assert parse_hypergraph("3 2\n0 1\n1 2\n0 2\n") == complete_hypergraph(3, 2)
    assert complete_hypergraph(3, 2).num_edges == 3
    single = Hypergraph(3, 3, ((0, 1, 2),))
    assert set_degree(single, {0}) == 1
    assert neighborhood(single, {0}) == [(1, 2)]
    K = complete_hypergraph(6, 3)
    assert set_degree(K, {0, 1}) == 4 and set_degree(K, {0}) == 10
    assert neighborhood(K, {0, 1}) == [(2,), (3,), (4,), (5,)]
    assert neighborhood(complete_hypergraph(4, 2), {0}) == [(1,), (2,), (3,)]
    assert random_hypergraph(8, 4, 0.5, 42) == random_hypergraph(8, 4, 0.5, 42)
    with pytest.raises(HypergraphFormatError):
        parse_hypergraph("3 3\n0 1 1\n")
    with pytest.raises(ValueError):
        complete_hypergraph(2, 3)
    with pytest.raises(ValueError):
        random_hypergraph(6, 3, 1.5, 0)
