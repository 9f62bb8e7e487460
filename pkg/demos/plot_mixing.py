"""
Lazy s-walks converge to the degree distribution
================================================

Exact evolution of a point mass against the spectral mixing bound, then
the same walk sampled step by step.
"""

import numpy as np

from hyperlap import build_projection, complete_hypergraph, mixing_profile, sample_stop_distribution
from hyperlap.walks import delta, evolve, total_variation, transition_matrix

H = complete_hypergraph(6, 3)
D = build_projection(H, 2)   # s=2 > r/2: an Eulerian digraph on 30 ordered pairs
x0 = D.index.index_of_tuple((0, 1))

lhs, rhs = mixing_profile(D, delta(D.size, x0), alpha=0.5, kmax=12)
for k in range(0, 13, 3):
    print(f"k={k:2d}  distance={lhs[k]:.3e}  bound={rhs[k]:.3e}")

# %%
# Monte Carlo: sampled walks should land on the exact distribution.
emp, stuck = sample_stop_distribution(H, 2, (0, 1), alpha=0.5, k=10, n_walks=50_000, seed=1)
exact = evolve(transition_matrix(D, 0.5), delta(D.size, x0), 10)
print(f"total variation after 10 steps: {total_variation(emp, exact):.4f} (stuck walks: {stuck})")
print("most likely stops:", [D.index.tuple_of_index(i) for i in np.argsort(exact)[-3:]])
