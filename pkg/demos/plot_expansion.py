"""
Edge counts between families of vertex sets
===========================================

The number of edges joining two families of small vertex sets stays close
to the product of their densities, within a spectral error term.
"""

import numpy as np

from hyperlap import hyper_expansion, hyper_expansion_union, random_hypergraph
from hyperlap.metrics import random_family

rng = np.random.default_rng(0)
H = random_hypergraph(8, 4, 0.6, seed=5)
print(f"{H.num_edges} edges")

for _ in range(5):
    S, T = random_family(8, 2, rng, 8), random_family(8, 1, rng, 3)
    rep = hyper_expansion(H, 2, 1, S, T)
    print(f"|S|={len(S)} |T|={len(T)}  defect={rep.measured:+.4f}  bound={rep.bound:.4f}  ok={rep.satisfied}")

# %%
# For s > r/2 the relevant edges are exactly the unions x | y.
S, T = random_family(8, 3, rng, 20), random_family(8, 3, rng, 20)
print(hyper_expansion_union(H, 3, S, T).to_json())
