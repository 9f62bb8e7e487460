"""s-distances, s-diameters, their spectral bounds, and edge-expansion checks."""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from math import comb, factorial

import numpy as np
from scipy.sparse import csr_array
from scipy.sparse.csgraph import shortest_path

from .hypergraph import Hypergraph
from .projection import DirectedProjection, Projection, WeightedProjection, build_projection
from .spectra import Spectrum, sigma_alpha, spectrum as projection_spectrum

INF = math.inf
EXPANSION_TOL = 1e-9


class PreconditionError(ValueError):
    """A theorem's hypothesis does not hold for the given inputs."""


@dataclass
class BoundReport:
    """Measured quantity next to its spectral bound."""

    quantity: str
    measured: float
    bound: float
    inputs: dict = field(default_factory=dict)
    satisfied: bool = False

    def to_dict(self) -> dict:
        def plain(v):
            if isinstance(v, (np.integer,)):
                return int(v)
            if isinstance(v, (np.floating,)):
                return float(v)
            if isinstance(v, float) and math.isinf(v):
                return "inf"
            return v

        return {
            "quantity": self.quantity,
            "measured": plain(self.measured),
            "bound": plain(self.bound),
            "inputs": {k: plain(v) for k, v in self.inputs.items()},
            "satisfied": bool(self.satisfied),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _upper(quantity, measured, bound, inputs) -> BoundReport:
    return BoundReport(quantity, measured, bound, inputs, bool(measured <= bound))


def _expansion(quantity, defect, bound, inputs, tol) -> BoundReport:
    return BoundReport(quantity, defect, bound, inputs, bool(abs(defect) <= bound + tol))


# --------------------------------------------------------------------- distances


def _ids(P: Projection, items) -> list[int]:
    out = []
    for it in items:
        if isinstance(it, (int, np.integer)):
            if not 0 <= it < P.size:
                raise IndexError(f"tuple id {it} out of range")
            out.append(int(it))
        else:
            out.append(P.index.index_of_tuple(it))
    return out


def _neighbors(P: Projection) -> list[np.ndarray]:
    adj = P.__dict__.get("_nbrs")
    if adj is None:
        adj = [np.flatnonzero(row) for row in P.adjacency]
        P.__dict__["_nbrs"] = adj
    return adj


def bfs_distances(P: Projection, sources) -> np.ndarray:
    """Hop distances from the source set (``inf`` where unreachable)."""
    nbrs = _neighbors(P)
    dist = np.full(P.size, INF)
    queue = deque()
    for u in sources:
        if dist[u] != 0:
            dist[u] = 0
            queue.append(u)
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for v in nbrs[u]:
            if dist[v] == INF:
                dist[v] = du
                queue.append(v)
    return dist


def _as_count(v: float):
    return INF if math.isinf(v) else int(v)


def s_distance(P: Projection, x, y):
    """Length of a shortest s-path from stop x to stop y (``inf`` if none)."""
    (i, j) = _ids(P, [x, y])
    return _as_count(bfs_distances(P, [i])[j])


def set_distance(P: Projection, X, Y):
    """``min d(x, y)`` over ``x in X, y in Y`` (from X to Y for digraphs)."""
    X, Y = _ids(P, X), _ids(P, Y)
    if not X or not Y:
        raise ValueError("set_distance needs nonempty X and Y")
    return _as_count(bfs_distances(P, X)[Y].min())


def all_pairs_distances(P: Projection) -> np.ndarray:
    return shortest_path(csr_array(P.adjacency), method="D", directed=P.directed, unweighted=True)


def s_diameter(P: Projection):
    """Largest s-distance over all ordered stop pairs; ``inf`` if not s-connected."""
    return _as_count(all_pairs_distances(P).max())


# ------------------------------------------------------------------ distance bounds


def _vol_ratio(volX, volY, volXbar, volYbar) -> float:
    if volX <= 0 or volY <= 0:
        raise ValueError("vol(X) and vol(Y) must be positive")
    return (volXbar * volYbar) / (volX * volY)


def _log_ratio(volX, volY, volXbar, volYbar) -> float:
    R = _vol_ratio(volX, volY, volXbar, volYbar)
    return -INF if R == 0 else math.log(R)


def distance_bound_weighted(spec: Spectrum, volX, volY, volXbar, volYbar, tol: float = 1e-9) -> int:
    """Spectral upper bound on ``d(X, Y)`` for sets at distance at least 2.

    ``ceil(log sqrt(vol X' vol Y' / vol X vol Y) / log((lmax + l1) / (lmax - l1)))``,
    floored at 1.
    """
    l1, lmax = spec.lambda1, spec.lambda_max
    if l1 <= tol:
        raise PreconditionError("lambda_1 = 0: the projection is disconnected")
    if lmax - l1 <= tol:
        raise PreconditionError("lambda_max = lambda_1: complete weighted graph, bound does not apply")
    num = 0.5 * _log_ratio(volX, volY, volXbar, volYbar)
    den = math.log((lmax + l1) / (lmax - l1))
    return max(1, math.ceil(num / den))


def diameter_bound_weighted(spec: Spectrum, vol, min_degree, tol: float = 1e-9) -> int:
    """``ceil(log(vol / delta) / log((lmax + l1) / (lmax - l1)))``."""
    l1, lmax = spec.lambda1, spec.lambda_max
    if l1 <= tol:
        raise PreconditionError("lambda_1 = 0: the projection is disconnected")
    if lmax - l1 <= tol:
        raise PreconditionError("lambda_max = lambda_1: complete weighted graph, bound does not apply")
    if min_degree <= 0:
        raise PreconditionError("minimum degree is 0")
    return max(1, math.ceil(math.log(vol / min_degree) / math.log((lmax + l1) / (lmax - l1))))


def distance_bound_directed(lambda1, sigma, volX, volY, volXbar, volYbar):
    """Two upper bounds on the directed ``d(X, Y)``.

    Returns ``(via_sigma, via_lambda1)``: the first uses ``log(1/sigma_alpha)``
    in the denominator, the second ``log(2/(2 - lambda_1))`` with the full
    log of the volume ratio.  A variant whose input gives no contraction is
    ``None``.
    """
    if sigma >= 1 and lambda1 <= 0:
        raise PreconditionError("sigma_alpha >= 1 and lambda_1 = 0: no finite bound")
    L = _log_ratio(volX, volY, volXbar, volYbar)
    via_sigma = None
    if 0 < sigma < 1:
        via_sigma = math.floor(0.5 * L / math.log(1 / sigma)) + 1
    elif sigma == 0:
        via_sigma = 1
    via_lambda = None
    if lambda1 > 0:
        via_lambda = math.floor(L / math.log(2 / (2 - lambda1))) + 1
    return via_sigma, via_lambda


def diameter_bounds_directed(lambda1, sigma, vol, min_degree) -> dict:
    """Diameter bounds for an Eulerian digraph.

    Keys: ``"sigma"`` ceil(log(vol/delta)/log(1/sigma)); ``"chung"``
    floor(2 log(vol/delta)/log(2/(2-l1))) + 1; ``"hypergraph"``
    ceil(2 log(vol/delta)/log(2/(2-l1))); ``"lambda_pairs"`` the pairwise
    lambda_1 bound maximized over stop pairs, attained at two minimum-degree
    stops.
    """
    if min_degree <= 0:
        raise PreconditionError("minimum degree is 0")
    out = {}
    ratio = math.log(vol / min_degree)
    if 0 < sigma < 1:
        out["sigma"] = max(1, math.ceil(ratio / math.log(1 / sigma)))
    if lambda1 > 0:
        g = math.log(2 / (2 - lambda1))
        out["chung"] = math.floor(2 * ratio / g) + 1
        out["hypergraph"] = max(1, math.ceil(2 * ratio / g))
        out["lambda_pairs"] = distance_bound_directed(
            lambda1, 1.0, min_degree, min_degree, vol - min_degree, vol - min_degree)[1]
    return out


def distance_reports(P: Projection, X, Y, spec: Spectrum | None = None, alpha: float = 0.5,
                     sigma: float | None = None) -> list[BoundReport]:
    """Check the set-distance bounds for one ``(X, Y)`` pair."""
    Xi, Yi = _ids(P, X), _ids(P, Y)
    spec = spec if spec is not None else projection_spectrum(P)
    measured = set_distance(P, Xi, Yi)
    vX, vY = P.volume_of(Xi), P.volume_of(Yi)
    vol = P.volume
    inputs = {"lambda1": spec.lambda1, "lambdaMax": spec.lambda_max,
              "volX": vX, "volY": vY, "volXbar": vol - vX, "volYbar": vol - vY}
    if not P.directed:
        if measured < 2:
            raise PreconditionError(f"d(X, Y) = {measured} < 2; the distance bound needs d >= 2")
        bound = distance_bound_weighted(spec, vX, vY, vol - vX, vol - vY)
        return [_upper("set_distance_weighted", measured, bound, inputs)]
    sigma = sigma if sigma is not None else sigma_alpha(P, alpha)
    inputs.update(alpha=alpha, sigmaAlpha=sigma)
    via_sigma, via_lambda = distance_bound_directed(spec.lambda1, sigma, vX, vY, vol - vX, vol - vY)
    reports = []
    if via_sigma is not None:
        reports.append(_upper("set_distance_directed_sigma", measured, via_sigma, inputs))
    if via_lambda is not None:
        reports.append(_upper("set_distance_directed_lambda1", measured, via_lambda, inputs))
    return reports


def diameter_reports(P: Projection, spec: Spectrum | None = None, alpha: float = 0.5,
                     sigma: float | None = None) -> list[BoundReport]:
    """Measured s-diameter against every applicable spectral diameter bound."""
    spec = spec if spec is not None else projection_spectrum(P)
    if not spec.connected:
        raise PreconditionError("projection is not connected; the s-diameter is infinite")
    measured = s_diameter(P)
    vol, delta = P.volume, P.min_degree
    inputs = {"lambda1": spec.lambda1, "lambdaMax": spec.lambda_max, "vol": vol, "delta": delta}
    if not P.directed:
        bound = diameter_bound_weighted(spec, vol, delta)
        return [_upper("diameter_weighted", measured, bound, inputs)]
    sigma = sigma if sigma is not None else sigma_alpha(P, alpha)
    inputs.update(alpha=alpha, sigmaAlpha=sigma)
    bounds = diameter_bounds_directed(spec.lambda1, sigma, vol, delta)
    return [_upper(f"diameter_directed_{name}", measured, b, inputs) for name, b in bounds.items()]


# ---------------------------------------------------------- expansion on projections


def _ids_array(P: Projection, items) -> np.ndarray:
    return np.asarray(_ids(P, items), dtype=np.intp)


def edge_count(P: Projection, X, Y) -> int:
    """``sum_{u in X, v in Y} A(u, v)``: ordered pairs, weighted."""
    Xi, Yi = _ids_array(P, X), _ids_array(P, Y)
    if Xi.size == 0 or Yi.size == 0:
        return 0
    return int(P.adjacency[np.ix_(Xi, Yi)].sum())


def _mixing_terms(P: Projection, Xi, Yi):
    vol = P.volume
    vX, vY = P.volume_of(Xi), P.volume_of(Yi)
    expected = vX * vY / vol
    root = math.sqrt(max(0, vX * vY * (vol - vX) * (vol - vY))) / vol
    return vol, vX, vY, expected, root


def expansion_weighted(G: WeightedProjection, X, Y, spec: Spectrum | None = None) -> BoundReport:
    """``| |E(X,Y)| - vol X vol Y / vol | <= lambda-bar sqrt(...) / vol``."""
    spec = spec if spec is not None else projection_spectrum(G)
    Xi, Yi = _ids_array(G, X), _ids_array(G, Y)
    e = edge_count(G, Xi, Yi)
    vol, vX, vY, expected, root = _mixing_terms(G, Xi, Yi)
    inputs = {"lambdaBar": spec.lambda_bar, "E": e, "volX": vX, "volY": vY, "vol": vol}
    return _expansion("expansion_weighted", e - expected, spec.lambda_bar * root, inputs,
                      EXPANSION_TOL * max(1, vol))


def expansion_directed(D: DirectedProjection, X, Y, spec: Spectrum | None = None,
                       sigma0: float | None = None) -> tuple[BoundReport, BoundReport]:
    """The sigma_0 one-way bound and the lambda-bar symmetrized bound."""
    spec = spec if spec is not None else projection_spectrum(D)
    sigma0 = sigma0 if sigma0 is not None else sigma_alpha(D, 0.0)
    Xi, Yi = _ids_array(D, X), _ids_array(D, Y)
    exy, eyx = edge_count(D, Xi, Yi), edge_count(D, Yi, Xi)
    vol, vX, vY, expected, root = _mixing_terms(D, Xi, Yi)
    tol = EXPANSION_TOL * max(1, vol)
    inputs = {"E_XY": exy, "E_YX": eyx, "volX": vX, "volY": vY, "vol": vol}
    one_way = _expansion("expansion_directed_sigma0", exy - expected, sigma0 * root,
                         {**inputs, "sigma0": sigma0}, tol)
    sym = _expansion("expansion_directed_symmetric", (exy + eyx) / 2 - expected,
                     spec.lambda_bar * root, {**inputs, "lambdaBar": spec.lambda_bar}, tol)
    return one_way, sym


# ---------------------------------------------------------- expansion on hypergraphs


def _subset_family(items, size: int, n: int) -> set[tuple[int, ...]]:
    fam = set()
    for it in items:
        t = tuple(sorted(int(v) for v in it))
        if len(t) != size or len(set(t)) != size or (t and not 0 <= t[0] <= t[-1] < n):
            raise ValueError(f"{it} is not a {size}-subset of range({n})")
        fam.add(t)
    return fam


def set_family_volume(H: Hypergraph, S) -> int:
    """Sum of hypergraph degrees over a family of equal-size vertex sets."""
    S = list(S)
    if not S:
        return 0
    table = H.degree_table(len(next(iter(S))))
    return sum(table.get(tuple(sorted(x)), 0) for x in S)


def density(H: Hypergraph, S, s: int) -> float:
    """``e(S) = vol(S) / (|E| C(r, s))``."""
    if H.num_edges == 0:
        raise ValueError("densities are undefined for a hypergraph without edges")
    return set_family_volume(H, S) / (H.num_edges * comb(H.r, s))


def count_disjoint_pairs(H: Hypergraph, S, T, s: int, t: int) -> int:
    """Triples ``(x, y, F)``: ``x in S``, ``y in T`` disjoint, ``x | y`` inside edge F."""
    Sf, Tf = set(S), set(T)
    total = 0
    for F in H.edges:
        for x in combinations(F, s):
            if x not in Sf:
                continue
            rest = [v for v in F if v not in x]
            total += sum(1 for y in combinations(rest, t) if y in Tf)
    return total


def count_union_pairs(H: Hypergraph, S, T, s: int) -> int:
    """Triples ``(x, y, F)``: ``x in S``, ``y in T``, ``x | y = F`` an edge."""
    Sf, Tf = set(S), set(T)
    k = 2 * s - H.r
    total = 0
    for F in H.edges:
        for x in combinations(F, s):
            if x not in Sf:
                continue
            outside = [v for v in F if v not in x]
            for shared in combinations(x, k):
                if tuple(sorted(outside + list(shared))) in Tf:
                    total += 1
    return total


def _hyper_report(name, H, s, t, S, T, count, total, halve, spec):
    eS, eT = density(H, S, s), density(H, T, t)
    eST = count / total
    lhs = (eST / 2 if halve else eST) - eS * eT
    root = math.sqrt(max(0.0, eS * eT * (1 - eS) * (1 - eT)))
    inputs = {"s": s, "t": t, "count": count, "total": total, "eS": eS, "eT": eT,
              "eST": eST, "lambdaBar": spec.lambda_bar}
    return _expansion(name, lhs, spec.lambda_bar * root, inputs, EXPANSION_TOL)


def _spectrum_for(H: Hypergraph, s: int, spec):
    return spec if spec is not None else projection_spectrum(build_projection(H, s))


def hyper_expansion(H: Hypergraph, s: int, t: int, S, T, spec: Spectrum | None = None) -> BoundReport:
    """Edge expansion between s-sets and t-sets for ``1 <= t <= s <= r/2``.

    ``|E(S, T)|`` counts ``(x, y, F)`` triples, so the full families have
    density 1.
    """
    r = H.r
    if not (1 <= t <= s and 2 * s <= r):
        raise ValueError(f"need 1 <= t <= s <= r/2, got s={s}, t={t}, r={r}")
    S, T = _subset_family(S, s, H.n), _subset_family(T, t, H.n)
    total = H.num_edges * factorial(r) // (factorial(s) * factorial(t) * factorial(r - s - t))
    count = count_disjoint_pairs(H, S, T, s, t)
    return _hyper_report("hyper_expansion", H, s, t, S, T, count, total, False, _spectrum_for(H, s, spec))


def intersection_witness(S, T, size: int):
    """A pair ``(x, y)`` with ``|x & y| == size``, or None."""
    for x in S:
        xs = set(x)
        for y in T:
            if len(xs.intersection(y)) == size:
                return x, y
    return None


def hyper_expansion_directed(H: Hypergraph, s: int, t: int, S, T, spec: Spectrum | None = None) -> BoundReport:
    """Halved edge expansion for ``1 <= t < r/2 < s``, ``s + t <= r``.

    Requires ``|x & y| != min(t, 2s - r)`` for all ``x in S, y in T``.
    """
    r = H.r
    if not (1 <= t and 2 * t < r < 2 * s and s + t <= r):
        raise ValueError(f"need 1 <= t < r/2 < s and s + t <= r, got s={s}, t={t}, r={r}")
    S, T = _subset_family(S, s, H.n), _subset_family(T, t, H.n)
    bad = min(t, 2 * s - r)
    witness = intersection_witness(S, T, bad)
    if witness is not None:
        raise PreconditionError(f"|x & y| = {bad} for x={witness[0]}, y={witness[1]}")
    total = H.num_edges * factorial(r) // (factorial(r - s - t) * factorial(s) * factorial(t))
    count = count_disjoint_pairs(H, S, T, s, t)
    return _hyper_report("hyper_expansion_directed", H, s, t, S, T, count, total, True,
                         _spectrum_for(H, s, spec))


def hyper_expansion_union(H: Hypergraph, s: int, S, T, spec: Spectrum | None = None) -> BoundReport:
    """Expansion counting edges of the form ``x | y`` for ``r/2 < s <= r-1``."""
    r = H.r
    if not r < 2 * s <= 2 * (r - 1):
        raise ValueError(f"need r/2 < s <= r-1, got s={s}, r={r}")
    S, T = _subset_family(S, s, H.n), _subset_family(T, s, H.n)
    total = H.num_edges * factorial(r) // (factorial(r - s) ** 2 * factorial(2 * s - r))
    count = count_union_pairs(H, S, T, s)
    return _hyper_report("hyper_expansion_union", H, s, s, S, T, count, total, False,
                         _spectrum_for(H, s, spec))


# ------------------------------------------------------------------- random inputs


def random_family(n: int, size: int, rng: np.random.Generator, count: int | None = None) -> list[tuple[int, ...]]:
    """``count`` distinct random ``size``-subsets of ``range(n)`` (random count if None)."""
    pool = list(combinations(range(n), size))
    if count is None:
        count = int(rng.integers(1, len(pool) + 1))
    pick = rng.choice(len(pool), size=min(count, len(pool)), replace=False)
    return [pool[i] for i in sorted(pick)]


def random_halved_families(n: int, r: int, s: int, t: int, rng: np.random.Generator):
    """Random ``(S, T)`` meeting the intersection hypothesis of the halved expansion bound.

    T is drawn from the t-sets compatible with every member of S, so T may be
    empty when S is large.
    """
    bad = min(t, 2 * s - r)
    S = random_family(n, s, rng, int(rng.integers(1, 6)))
    allowed = [y for y in combinations(range(n), t)
               if all(len(set(x).intersection(y)) != bad for x in S)]
    if not allowed:
        return S, []
    k = int(rng.integers(1, len(allowed) + 1))
    pick = rng.choice(len(allowed), size=k, replace=False)
    return S, [allowed[i] for i in sorted(pick)]
