"""Uniform hypergraphs: construction, set degrees, neighborhoods and a text format."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable

import numpy as np


class HypergraphFormatError(ValueError):
    """Malformed hypergraph text; ``lineno`` is 1-based."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on the vertices ``0..n-1``.

    Edges are stored as sorted tuples, in lexicographic order.  Construction
    validates arity, vertex range and rejects duplicate edges.
    """

    n: int
    r: int
    edges: tuple[tuple[int, ...], ...] = field(default=())

    def __post_init__(self):
        if self.r < 2:
            raise ValueError(f"uniformity must be at least 2, got r={self.r}")
        if self.n < self.r:
            raise ValueError(f"need n >= r, got n={self.n}, r={self.r}")
        canon = []
        for e in self.edges:
            t = tuple(sorted(int(v) for v in e))
            if len(t) != self.r or len(set(t)) != self.r:
                raise ValueError(f"edge {tuple(e)} does not have {self.r} distinct vertices")
            if t[0] < 0 or t[-1] >= self.n:
                raise ValueError(f"edge {tuple(e)} has a vertex outside [0, {self.n})")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise ValueError(f"duplicate edge {a}")
        object.__setattr__(self, "edges", tuple(canon))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_sets(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return frozenset(vertices) in self.edge_sets

    @cached_property
    def _degree_tables(self) -> dict[int, Counter]:
        return {}

    def degree_table(self, s: int) -> Counter:
        """Map each sorted s-subset contained in some edge to its degree."""
        table = self._degree_tables.get(s)
        if table is None:
            table = Counter()
            for e in self.edges:
                table.update(combinations(e, s))
            self._degree_tables[s] = table
        return table

    def relabel(self, perm) -> Hypergraph:
        """Image of the hypergraph under the vertex map ``v -> perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Hypergraph(self.n, self.r, tuple(tuple(perm[v] for v in e) for e in self.edges))


def complete_hypergraph(n: int, r: int) -> Hypergraph:
    """The complete r-uniform hypergraph K_n^r."""
    if r < 2 or n < r:
        raise ValueError(f"need n >= r >= 2, got n={n}, r={r}")
    return Hypergraph(n, r, tuple(combinations(range(n), r)))


def random_hypergraph(n: int, r: int, p: float, seed: int) -> Hypergraph:
    """Include each r-subset of ``range(n)`` independently with probability p.

    Uses numpy's PCG64 generator seeded with ``seed``, so the edge set is a
    deterministic function of ``(n, r, p, seed)``.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"p must lie in [0, 1], got {p}")
    if r < 2 or n < r:
        raise ValueError(f"need n >= r >= 2, got n={n}, r={r}")
    rng = np.random.default_rng(seed)
    candidates = list(combinations(range(n), r))
    keep = rng.random(len(candidates)) < p
    return Hypergraph(n, r, tuple(c for c, k in zip(candidates, keep) if k))


def _check_subset(H: Hypergraph, S) -> tuple[int, ...]:
    key = tuple(sorted(S))
    if len(set(key)) != len(key):
        raise ValueError(f"vertex set {S} has repeated vertices")
    if len(key) >= H.r:
        raise ValueError(f"|S| must be < r={H.r}, got |S|={len(key)}")
    if key and (key[0] < 0 or key[-1] >= H.n):
        raise ValueError(f"vertex set {S} not contained in [0, {H.n})")
    return key


def set_degree(H: Hypergraph, S) -> int:
    """Number of edges of H containing the vertex set S (``|S| < r``)."""
    key = _check_subset(H, S)
    if not key:
        return H.num_edges
    return H.degree_table(len(key)).get(key, 0)


def neighborhood(H: Hypergraph, S) -> list[tuple[int, ...]]:
    """All (r-|S|)-sets T disjoint from S with S | T an edge, as sorted tuples."""
    key = _check_subset(H, S)
    s = set(key)
    return [tuple(v for v in e if v not in s) for e in H.edges if s.issubset(e)]


def parse_hypergraph(text: str) -> Hypergraph:
    """Parse the ``n r`` header + one-edge-per-line format.

    Lines starting with ``#`` and blank lines are ignored.
    """
    header = None
    edges: list[tuple[int, ...]] = []
    seen: dict[tuple[int, ...], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError:
            raise HypergraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if len(fields) != 2:
                raise HypergraphFormatError("header must be 'n r'", lineno)
            n, r = fields
            if r < 2 or n < r:
                raise HypergraphFormatError(f"invalid header n={n}, r={r}", lineno)
            header = (n, r)
            continue
        n, r = header
        if len(fields) != r:
            raise HypergraphFormatError(f"edge has {len(fields)} vertices, expected {r}", lineno)
        if len(set(fields)) != r:
            raise HypergraphFormatError(f"edge {fields} repeats a vertex", lineno)
        bad = [v for v in fields if not 0 <= v < n]
        if bad:
            raise HypergraphFormatError(f"vertex {bad[0]} out of range [0, {n})", lineno)
        edge = tuple(sorted(fields))
        if edge in seen:
            raise HypergraphFormatError(f"duplicate edge {edge} (first on line {seen[edge]})", lineno)
        seen[edge] = lineno
        edges.append(edge)
    if header is None:
        raise HypergraphFormatError("missing 'n r' header")
    return Hypergraph(header[0], header[1], tuple(edges))


def serialize_hypergraph(H: Hypergraph) -> str:
    lines = [f"{H.n} {H.r}"]
    lines.extend(" ".join(map(str, e)) for e in H.edges)
    return "\n".join(lines) + "\n"


def read_hypergraph(path) -> Hypergraph:
    with open(path) as fh:
        return parse_hypergraph(fh.read())


def write_hypergraph(H: Hypergraph, path) -> None:
    with open(path, "w") as fh:
        fh.write(serialize_hypergraph(H))
