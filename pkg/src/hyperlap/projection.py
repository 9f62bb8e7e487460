"""Graphs on ordered s-tuples that encode s-walks of a uniform hypergraph.

For ``1 <= s <= r/2`` the s-walks live on a weighted undirected graph; for
``r/2 < s <= r-1`` they live on an Eulerian digraph.  Both are built over
every ordered s-tuple of distinct vertices, isolated tuples included, so
matrix sizes are always ``n!/(n-s)!``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from math import comb, factorial, perm

import numpy as np

from .hypergraph import Hypergraph


class TupleIndex:
    """Lexicographic bijection between ordered s-tuples of ``range(n)`` and ints."""

    def __init__(self, n: int, s: int):
        if not 1 <= s <= n:
            raise ValueError(f"need 1 <= s <= n, got n={n}, s={s}")
        self.n = n
        self.s = s
        self.tuples: list[tuple[int, ...]] = list(permutations(range(n), s))
        self._pos = {t: i for i, t in enumerate(self.tuples)}

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)

    def __repr__(self) -> str:
        return f"TupleIndex(n={self.n}, s={self.s})"

    def tuple_of_index(self, idx: int) -> tuple[int, ...]:
        if not 0 <= idx < len(self.tuples):
            raise IndexError(f"tuple index {idx} out of range [0, {len(self.tuples)})")
        return self.tuples[idx]

    def index_of_tuple(self, t) -> int:
        t = tuple(int(v) for v in t)
        if len(t) != self.s:
            raise ValueError(f"expected a {self.s}-tuple, got {t}")
        if len(set(t)) != self.s:
            raise ValueError(f"tuple {t} repeats a vertex")
        try:
            return self._pos[t]
        except KeyError:
            raise ValueError(f"tuple {t} has a vertex outside [0, {self.n})") from None

    def indices_of_sets(self, subsets) -> np.ndarray:
        """Ids of all orderings of the given s-subsets (the lift of a set family)."""
        wanted = {frozenset(x) for x in subsets}
        return np.array([i for i, t in enumerate(self.tuples) if frozenset(t) in wanted], dtype=np.intp)


@dataclass(eq=False)
class Projection:
    hypergraph: Hypergraph
    s: int
    index: TupleIndex
    adjacency: np.ndarray
    degrees: np.ndarray

    directed = False

    @property
    def size(self) -> int:
        return len(self.index)

    @property
    def volume(self) -> int:
        return int(self.degrees.sum())

    @cached_property
    def min_degree(self) -> int:
        return int(self.degrees.min())

    def volume_of(self, ids) -> int:
        ids = np.asarray(list(ids) if not isinstance(ids, np.ndarray) else ids, dtype=np.intp)
        return int(self.degrees[ids].sum()) if ids.size else 0

    def to_triplets(self) -> str:
        """Sparse triplet text: ``# dim N`` then one ``i j value`` line per nonzero."""
        rows, cols = np.nonzero(self.adjacency)
        lines = [f"# dim {self.size}"]
        lines.extend(f"{i} {j} {self.adjacency[i, j]}" for i, j in zip(rows, cols))
        return "\n".join(lines) + "\n"


@dataclass(eq=False)
class WeightedProjection(Projection):
    """Weighted graph on ordered s-tuples; ``w(x, y)`` counts edges containing ``[x] | [y]``."""

    @property
    def weights(self) -> np.ndarray:
        return self.adjacency


@dataclass(eq=False)
class DirectedProjection(Projection):
    """Eulerian digraph on ordered s-tuples (0/1 adjacency)."""

    directed = True

    @property
    def out_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=1)

    @property
    def in_degrees(self) -> np.ndarray:
        return self.adjacency.sum(axis=0)


def build_weighted(H: Hypergraph, s: int) -> WeightedProjection:
    """Weighted projection for ``1 <= s <= r/2``."""
    if not 1 <= s <= H.r / 2:
        raise ValueError(f"weighted projection needs 1 <= s <= r/2 (r={H.r}), got s={s}")
    index = TupleIndex(H.n, s)
    pos = index._pos
    W = np.zeros((len(index), len(index)), dtype=np.int64)
    for e in H.edges:
        for x in permutations(e, s):
            rest = [v for v in e if v not in x]
            i = pos[x]
            for y in permutations(rest, s):
                W[i, pos[y]] += 1
    degrees = W.sum(axis=1)
    return WeightedProjection(H, s, index, W, degrees)


def build_directed(H: Hypergraph, s: int) -> DirectedProjection:
    """Eulerian digraph for ``r/2 < s <= r-1``.

    ``x -> y`` iff the last ``2s-r`` entries of x start y and ``[x] | [y]``
    is an edge.
    """
    r = H.r
    if not r / 2 < s <= r - 1:
        raise ValueError(f"directed projection needs r/2 < s <= r-1 (r={r}), got s={s}")
    index = TupleIndex(H.n, s)
    pos = index._pos
    A = np.zeros((len(index), len(index)), dtype=np.int64)
    overlap = 2 * s - r
    for e in H.edges:
        for x in permutations(e, s):
            head = x[s - overlap:]
            new = [v for v in e if v not in x]
            i = pos[x]
            for tail in permutations(new):
                A[i, pos[head + tail]] = 1
    out_deg = A.sum(axis=1)
    in_deg = A.sum(axis=0)
    bad = np.flatnonzero(out_deg != in_deg)
    if bad.size:
        x = index.tuples[bad[0]]
        raise ValueError(f"directed projection is not Eulerian at tuple {x}")
    return DirectedProjection(H, s, index, A, out_deg)


def build_projection(H: Hypergraph, s: int) -> Projection:
    """Weighted projection when ``s <= r/2``, directed one otherwise."""
    if not 1 <= s <= H.r - 1:
        raise ValueError(f"s must lie in [1, r-1] = [1, {H.r - 1}], got s={s}")
    return build_weighted(H, s) if 2 * s <= H.r else build_directed(H, s)


def expected_degree(H: Hypergraph, s: int, set_degree: int) -> int:
    """Tuple degree predicted from the degree of its underlying set."""
    r = H.r
    if 2 * s <= r:
        return set_degree * comb(r - s, s) * factorial(s)
    return set_degree * factorial(r - s)


def expected_volume(H: Hypergraph, s: int) -> int:
    r = H.r
    if 2 * s <= r:
        return H.num_edges * perm(r, 2 * s)
    return H.num_edges * factorial(r)
