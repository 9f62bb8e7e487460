"""
Laplacian spectra of complete hypergraphs
=========================================

Each walk order s gives a graph on ordered s-tuples.  For the complete
hypergraphs the first and last nonzero eigenvalues come out as small
fractions.
"""

from fractions import Fraction

from hyperlap import build_projection, complete_hypergraph, spectrum

for n, r in [(6, 3), (7, 4), (7, 5)]:
    H = complete_hypergraph(n, r)
    print(f"K_{n}^{r}: {H.num_edges} edges")
    for s in range(1, r):
        P = build_projection(H, s)
        sp = spectrum(P)
        kind = "digraph" if P.directed else "weighted"
        l1 = Fraction(sp.lambda1).limit_denominator(20)
        exact = f" = {l1}" if abs(l1 - sp.lambda1) < 1e-9 else ""
        print(f"  s={s} ({kind}, {P.size} tuples): lambda1={sp.lambda1:.6f}{exact}, "
              f"lambdaMax={sp.lambda_max:.6f}")

# %%
# lambda1 shrinks as s grows, so longer overlaps mix more slowly.
