"""
s-distances and the spectral diameter bounds
============================================

Breadth-first search gives the exact s-diameter; the eigenvalues give
upper bounds that need no search.
"""

from hyperlap import build_projection, complete_hypergraph, diameter_reports, random_hypergraph, s_distance

D = build_projection(complete_hypergraph(6, 3), 2)
print("d((0,1), (2,3)) =", s_distance(D, (0, 1), (2, 3)))
print("d((0,1), (1,0)) =", s_distance(D, (0, 1), (1, 0)))

for label, H, s in [("K_6^4", complete_hypergraph(6, 4), 2),
                    ("K_6^5", complete_hypergraph(6, 5), 4),
                    ("random 7,4,0.6", random_hypergraph(7, 4, 0.6, seed=11), 3)]:
    P = build_projection(H, s)
    for rep in diameter_reports(P, alpha=0.5):
        print(f"{label:15s} s={s}  {rep.quantity:32s} diameter={rep.measured}  bound={rep.bound}")
