"""Slow, direct reference computations used only by the tests."""

from itertools import combinations, permutations

import numpy as np


def weight_by_definition(H, x, y):
    """Edges F with [x] and [y] disjoint and both inside F."""
    if set(x) & set(y):
        return 0
    return sum(1 for F in H.edges if set(x) | set(y) <= set(F))


def arc_by_definition(H, x, y):
    r, s = H.r, len(x)
    k = 2 * s - r
    if any(x[r - s + j] != y[j] for j in range(k)):
        return 0
    return int(H.has_edge(set(x) | set(y)) and len(set(x) | set(y)) == r)


def walk_distance_by_enumeration(H, s, x, y, max_len):
    """Shortest s-walk length from stop x to stop y, by growing vertex sequences.

    Enumerates every s-walk of length <= max_len as an explicit vertex
    sequence (each step appends an (r-s)-set in every order), without
    reference to the tuple graphs.  Returns None if none is found.
    """
    r = H.r
    frontier = {tuple(x)}
    if tuple(x) == tuple(y):
        return 0
    for length in range(1, max_len + 1):
        nxt = set()
        for stop in frontier:
            S = set(stop)
            for F in H.edges:
                if not S <= set(F):
                    continue
                new = [v for v in F if v not in S]
                if len(new) != r - s:
                    continue
                for order in permutations(new):
                    seq = stop + order
                    nxt.add(seq[-s:])
        if tuple(y) in nxt:
            return length
        frontier = nxt
    return None


def pair_count_by_definition(H, S, T):
    """|{(x, y, F)}|: x in S, y in T disjoint, x | y inside F."""
    return sum(1 for x in S for y in T for F in H.edges
               if not set(x) & set(y) and set(x) | set(y) <= set(F))


def union_count_by_definition(H, S, T):
    """|{(x, y, F)}|: x in S, y in T, x | y == F."""
    return sum(1 for x in S for y in T for F in H.edges if set(x) | set(y) == set(F))


def power_iteration_norm(M, iters=5000, seed=0):
    """Largest singular value of M via power iteration on M'M."""
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(M.shape[1])
    v /= np.linalg.norm(v)
    val = 0.0
    for _ in range(iters):
        w = M.T @ (M @ v)
        nw = np.linalg.norm(w)
        if nw == 0:
            return 0.0
        v = w / nw
        val = np.sqrt(nw)
    return val
