"""Lazy random s-walks: exact distribution evolution and Monte Carlo sampling."""

from __future__ import annotations

import json
import os
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .hypergraph import Hypergraph, neighborhood
from .projection import Projection, TupleIndex
from .spectra import lambda_bar_alpha, sigma_alpha, spectrum as projection_spectrum

RNG_ALGORITHM = "numpy.PCG64/SeedSequence"
DIST_TOL = 1e-12


def transition_matrix(P: Projection, alpha: float) -> np.ndarray:
    """Row-stochastic ``alpha I + (1-alpha) T^{-1} A``; degree-0 rows stay put."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    d = np.asarray(P.degrees, dtype=float)
    A = P.adjacency.astype(float)
    step = np.zeros_like(A)
    pos = d > 0
    step[pos] = A[pos] / d[pos, None]
    isolated = np.flatnonzero(~pos)
    step[isolated, isolated] = 1.0
    return alpha * np.eye(P.size) + (1 - alpha) * step


def stationary(P: Projection) -> np.ndarray:
    """``pi(x) = d_x / vol``."""
    d = np.asarray(P.degrees, dtype=float)
    vol = d.sum()
    if vol <= 0:
        raise ValueError("stationary distribution undefined: projection has no edges")
    return d / vol


def check_distribution(f, size: int | None = None) -> np.ndarray:
    f = np.asarray(f, dtype=float)
    if f.ndim != 1 or (size is not None and f.size != size):
        raise ValueError(f"distribution must be a vector of length {size}")
    if np.any(f < 0):
        raise ValueError("distribution has negative entries")
    if abs(f.sum() - 1.0) > DIST_TOL * max(1, f.size):
        raise ValueError(f"distribution sums to {f.sum()!r}, not 1")
    return f


def delta(size: int, idx: int) -> np.ndarray:
    f = np.zeros(size)
    f[idx] = 1.0
    return f


def random_distribution(P: Projection, rng: np.random.Generator) -> np.ndarray:
    """Dirichlet-random distribution on the positive-degree tuples."""
    mask = np.asarray(P.degrees) > 0
    f = np.zeros(P.size)
    f[mask] = rng.dirichlet(np.ones(mask.sum()))
    return f


def evolve(Pmat: np.ndarray, f0, k: int) -> np.ndarray:
    """``f0 P^k`` by k successive vector-matrix products."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    f = check_distribution(f0, Pmat.shape[0]).copy()
    for _ in range(k):
        f = f @ Pmat
    return f


def _weighted_norm(g: np.ndarray, inv_sqrt_d: np.ndarray) -> float:
    return float(np.linalg.norm(g * inv_sqrt_d))


def mixing_rate(P: Projection, alpha: float, spec=None, allow_vacuous: bool = False) -> float:
    """Contraction rate in the mixing bound: lambda-bar_alpha or sigma_alpha."""
    if P.directed:
        if alpha == 0.0 and not allow_vacuous:
            raise ValueError("directed mixing bound needs 0 < alpha < 1 (sigma_0 = 1 makes it vacuous)")
        if alpha == 0.0:
            warnings.warn("sigma_0 = 1 on these digraphs; the mixing bound is vacuous", stacklevel=2)
        return sigma_alpha(P, alpha)
    spec = spec if spec is not None else projection_spectrum(P)
    return lambda_bar_alpha(spec, alpha)


def mixing_profile(P: Projection, f0, alpha: float, kmax: int, spec=None, rate=None,
                   allow_vacuous: bool = False) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(lhs, rhs)`` arrays for steps ``0..kmax``.

    ``lhs[k] = ||(f_k - pi) T^{-1/2}||`` from exact evolution and
    ``rhs[k] = rate**k * lhs[0]``.
    """
    f = check_distribution(f0, P.size)
    d = np.asarray(P.degrees, dtype=float)
    if np.any(f[d == 0] > 0):
        raise ValueError("initial distribution puts mass on degree-0 tuples")
    if rate is None:
        rate = mixing_rate(P, alpha, spec=spec, allow_vacuous=allow_vacuous)
    pi = stationary(P)
    Pmat = transition_matrix(P, alpha)
    q = np.zeros_like(d)
    q[d > 0] = 1 / np.sqrt(d[d > 0])
    lhs = np.empty(kmax + 1)
    for k in range(kmax + 1):
        lhs[k] = _weighted_norm(f - pi, q)
        f = f @ Pmat
    rhs = lhs[0] * rate ** np.arange(kmax + 1)
    return lhs, rhs


def mixing_gap(P: Projection, f0, alpha: float, k: int, spec=None,
               allow_vacuous: bool = False) -> tuple[float, float]:
    lhs, rhs = mixing_profile(P, f0, alpha, k, spec=spec, allow_vacuous=allow_vacuous)
    return float(lhs[k]), float(rhs[k])


@dataclass
class WalkTrace:
    """One sampled s-walk: its stops, the full vertex sequence and a status."""

    seed: object
    alpha: float
    stops: list[tuple[int, ...]]
    vertices: list[int]
    status: str = "ok"
    rng: str = field(default=RNG_ALGORITHM)

    def to_json(self) -> str:
        return json.dumps({
            "seed": self.seed,
            "alpha": self.alpha,
            "stops": [list(x) for x in self.stops],
            "vertices": self.vertices,
            "status": self.status,
            "rng": self.rng,
        })


class _Sampler:
    """Shared neighborhood cache for walks on one (H, s)."""

    def __init__(self, H: Hypergraph, s: int):
        if not 1 <= s <= H.r - 1:
            raise ValueError(f"s must lie in [1, r-1], got s={s}")
        self.H = H
        self.s = s
        self._gamma: dict[frozenset, list[tuple[int, ...]]] = {}

    def gamma(self, stop: tuple[int, ...]) -> list[tuple[int, ...]]:
        key = frozenset(stop)
        nb = self._gamma.get(key)
        if nb is None:
            nb = neighborhood(self.H, key)
            self._gamma[key] = nb
        return nb

    def run(self, x0: tuple[int, ...], alpha: float, k: int, rng: np.random.Generator):
        s, m = self.s, self.H.r - self.s
        draws = rng.random((k, 2 + m))
        stop = x0
        stops = [stop]
        vertices = list(x0)
        for i in range(k):
            if draws[i, 0] < alpha:
                stops.append(stop)
                continue
            nb = self.gamma(stop)
            if not nb:
                return stops, vertices, "stuck"
            T = nb[min(int(draws[i, 1] * len(nb)), len(nb) - 1)]
            order = np.argsort(draws[i, 2:])
            vertices.extend(T[j] for j in order)
            stop = tuple(vertices[-s:])
            stops.append(stop)
        return stops, vertices, "ok"


def _validate_start(H: Hypergraph, s: int, x0) -> tuple[int, ...]:
    x0 = tuple(int(v) for v in x0)
    if len(x0) != s or len(set(x0)) != s or any(not 0 <= v < H.n for v in x0):
        raise ValueError(f"invalid initial stop {x0} for s={s}, n={H.n}")
    return x0


def sample_s_walk(H: Hypergraph, s: int, x0, alpha: float, k: int, seed) -> WalkTrace:
    """Sample an alpha-lazy random s-walk with k steps from the stop ``x0``.

    Each non-lazy step draws ``T`` uniformly from the neighborhood of the
    current stop's vertex set and appends its vertices in a uniformly random
    order; the next stop is the last s vertices.  A stop with empty
    neighborhood ends the walk with status ``"stuck"``.
    """
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    x0 = _validate_start(H, s, x0)
    stops, vertices, status = _Sampler(H, s).run(x0, alpha, k, np.random.default_rng(seed))
    return WalkTrace(seed, alpha, stops, vertices, status)


def _thread_count(workers: int | None) -> int:
    cap = os.environ.get("HYPERLAP_THREADS")
    n = workers if workers is not None else (int(cap) if cap else 1)
    if cap:
        n = min(n, int(cap))
    return max(1, n)


def sample_stop_distribution(H: Hypergraph, s: int, x0, alpha: float, k: int,
                             n_walks: int, seed: int, workers: int | None = None) -> tuple[np.ndarray, int]:
    """Empirical distribution of the k-th stop over ``n_walks`` sampled walks.

    Walk ``i`` uses the generator spawned from ``SeedSequence(seed)`` at
    position i, so the result does not depend on ``workers``.  Returns the
    distribution over tuple ids and the number of stuck walks (which are
    excluded from the counts).
    """
    x0 = _validate_start(H, s, x0)
    index = TupleIndex(H.n, s)
    children = np.random.SeedSequence(seed).spawn(n_walks)
    sampler = _Sampler(H, s)

    def chunk(lo: int, hi: int) -> tuple[np.ndarray, int]:
        counts = np.zeros(len(index), dtype=np.int64)
        stuck = 0
        for i in range(lo, hi):
            stops, _, status = sampler.run(x0, alpha, k, np.random.default_rng(children[i]))
            if status != "ok":
                stuck += 1
                continue
            counts[index.index_of_tuple(stops[-1])] += 1
        return counts, stuck

    nthreads = _thread_count(workers)
    bounds = np.linspace(0, n_walks, nthreads + 1).astype(int)
    with ThreadPoolExecutor(max_workers=nthreads) as pool:
        parts = list(pool.map(lambda b: chunk(*b), zip(bounds[:-1], bounds[1:])))
    counts = sum(p[0] for p in parts)
    stuck = sum(p[1] for p in parts)
    total = counts.sum()
    if total == 0:
        raise ValueError("every sampled walk got stuck")
    return counts / total, stuck


def total_variation(p, q) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())
