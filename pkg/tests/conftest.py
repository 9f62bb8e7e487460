import itertools

import pytest

from hyperlap import complete_hypergraph, random_hypergraph

TABLE_HYPERGRAPHS = [(6, 3), (7, 3), (6, 4), (7, 4), (6, 5), (7, 5)]

# 25 random instances: n in {6,7,8}, r in {3,4,5}, p in {0.3,0.6,1.0}
RANDOM_SPECS = [(n, r, p, 100 + i) for i, (n, r, p) in
                enumerate(list(itertools.product([6, 7, 8], [3, 4, 5], [0.3, 0.6, 1.0]))[:25])]


def random_suite():
    return [random_hypergraph(n, r, p, seed) for n, r, p, seed in RANDOM_SPECS]


def complete_suite():
    return [complete_hypergraph(n, r) for n, r in TABLE_HYPERGRAPHS]


@pytest.fixture(scope="session")
def k63():
    return complete_hypergraph(6, 3)


@pytest.fixture(scope="session")
def two_disjoint_edges():
    from hyperlap import Hypergraph
    return Hypergraph(6, 3, ((0, 1, 2), (3, 4, 5)))
