"""Normalized Laplacians of the tuple projections and their spectral quantities."""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.sparse import csr_array
from scipy.sparse.csgraph import connected_components

from .projection import DirectedProjection, Projection, WeightedProjection

log = logging.getLogger(__name__)

ZERO_TOL = 1e-8
SYMMETRY_TOL = 1e-12
RANGE_TOL = 1e-9


def _inv_sqrt_degrees(degrees: np.ndarray) -> np.ndarray:
    d = np.asarray(degrees, dtype=float)
    out = np.zeros_like(d)
    pos = d > 0
    out[pos] = 1.0 / np.sqrt(d[pos])
    return out


def normalized_adjacency(P: Projection) -> np.ndarray:
    """``T^{-1/2} A T^{-1/2}``, with zero rows/columns at degree-0 tuples."""
    q = _inv_sqrt_degrees(P.degrees)
    return q[:, None] * P.adjacency.astype(float) * q[None, :]


def _identity_on_support(P: Projection) -> np.ndarray:
    return np.diag((np.asarray(P.degrees) > 0).astype(float))


def laplacian_weighted(G: WeightedProjection) -> np.ndarray:
    """``I - T^{-1/2} W T^{-1/2}``; the diagonal is 0 at degree-0 tuples."""
    return _identity_on_support(G) - normalized_adjacency(G)


def laplacian_directed(D: DirectedProjection) -> tuple[np.ndarray, np.ndarray]:
    """Return the nonsymmetric Laplacian and its symmetrization."""
    L_dir = _identity_on_support(D) - normalized_adjacency(D)
    return L_dir, (L_dir + L_dir.T) / 2


def laplacian(P: Projection) -> np.ndarray:
    """The symmetric Laplacian of either projection kind."""
    if P.directed:
        return laplacian_directed(P)[1]
    return laplacian_weighted(P)


@dataclass(frozen=True)
class Spectrum:
    """Sorted Laplacian eigenvalues and the scalars derived from them.

    ``lambda1`` is the eigenvalue at position 1 of the sorted list, which is
    zero exactly when the projection is disconnected.  ``first_nonzero`` is
    the first eigenvalue above the zero cluster.
    """

    eigenvalues: np.ndarray
    zero_multiplicity: int
    s: int | None = None

    @property
    def count(self) -> int:
        return len(self.eigenvalues)

    @property
    def connected(self) -> bool:
        return self.zero_multiplicity == 1

    @property
    def lambda1(self) -> float:
        if self.count < 2:
            return 0.0
        return 0.0 if self.zero_multiplicity > 1 else float(self.eigenvalues[1])

    @property
    def first_nonzero(self) -> float:
        if self.zero_multiplicity >= self.count:
            return 0.0
        return float(self.eigenvalues[self.zero_multiplicity])

    @property
    def lambda_max(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def lambda_bar(self) -> float:
        return max(abs(1 - self.lambda1), abs(1 - self.lambda_max))

    def to_dict(self) -> dict:
        return {
            "s": self.s,
            "count": self.count,
            "eigenvalues": [float(v) for v in self.eigenvalues],
            "lambda1": self.lambda1,
            "lambdaMax": self.lambda_max,
            "lambdaBar": self.lambda_bar,
            "zeroMultiplicity": self.zero_multiplicity,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def eigenvalues(M: np.ndarray, s: int | None = None, zero_tol: float = ZERO_TOL) -> Spectrum:
    """Full spectrum of a symmetric Laplacian via a dense symmetric solver.

    Values outside ``[0, 2]`` by more than ``RANGE_TOL`` are logged, not clipped.
    """
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {M.shape}")
    asym = np.max(np.abs(M - M.T)) if M.size else 0.0
    if asym > SYMMETRY_TOL:
        raise ValueError(f"matrix is not symmetric (max |M - M'| = {asym:.3e})")
    try:
        vals = scipy.linalg.eigh(M, eigvals_only=True, check_finite=True)
    except scipy.linalg.LinAlgError as exc:
        raise RuntimeError(f"symmetric eigensolver did not converge: {exc}") from exc
    vals = np.sort(vals)
    if vals.size and (vals[0] < -RANGE_TOL or vals[-1] > 2 + RANGE_TOL):
        log.warning("Laplacian eigenvalues outside [0, 2]: min=%r max=%r", vals[0], vals[-1])
    zero_mult = int(np.count_nonzero(np.abs(vals) <= zero_tol))
    return Spectrum(vals, zero_mult, s)


def spectrum(P: Projection) -> Spectrum:
    """Spectrum of the s-th Laplacian of the projection."""
    return eigenvalues(laplacian(P), s=P.s)


def rayleigh_quotient(G: Projection, f) -> float:
    """``sum_{x~y} (f(x)-f(y))^2 w(x,y) / sum_x f(x)^2 d_x``.

    For a digraph this is the symmetrized form, with each arc counted once
    and the numerator halved.
    """
    f = np.asarray(f, dtype=float)
    d = np.asarray(G.degrees, dtype=float)
    denom = float(np.sum(f * f * d))
    if denom <= 0:
        raise ValueError("Rayleigh quotient undefined: f vanishes on every positive-degree tuple")
    A = G.adjacency.astype(float)
    diff2 = (f[:, None] - f[None, :]) ** 2
    return float(0.5 * np.sum(A * diff2) / denom)


def phi0(D: Projection) -> np.ndarray:
    """Unit vector ``sqrt(d) / sqrt(vol)``: left and right fixed vector of ``L_alpha``."""
    d = np.asarray(D.degrees, dtype=float)
    return np.sqrt(d) / math.sqrt(d.sum())


def lazy_operator(P: Projection, alpha: float) -> np.ndarray:
    """``L_alpha = I - (1-alpha) L_dir``, similar to the lazy transition matrix."""
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    L_dir = laplacian_directed(P)[0] if P.directed else laplacian_weighted(P)
    return np.eye(P.size) - (1 - alpha) * L_dir


def sigma_alpha(D: Projection, alpha: float) -> float:
    """Spectral norm of ``L_alpha`` on the orthogonal complement of ``phi0``.

    Computed as the top singular value of ``L_alpha (I - phi0' phi0)``.
    """
    L = lazy_operator(D, alpha)
    v = phi0(D)
    deflated = L - np.outer(L @ v, v)
    return float(scipy.linalg.svdvals(deflated)[0])


def lambda_bar_alpha(spec: Spectrum, alpha: float) -> float:
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    c = 1 - alpha
    return max(abs(1 - c * spec.lambda1), abs(1 - c * spec.lambda_max))


def lemma1_sigma_bound(alpha: float, lambda1: float, sigma0: float) -> float:
    """Upper bound on ``sigma_alpha**2`` from the lazy-walk decomposition."""
    return alpha**2 + 2 * alpha * (1 - alpha) * (1 - lambda1) + (1 - alpha) ** 2 * sigma0**2


def optimal_alpha(lambda1: float, sigma0: float) -> tuple[float, float]:
    """Laziness minimizing the ``sigma_alpha`` bound, and the resulting bound."""
    c = 1 - sigma0**2
    if lambda1 <= c:
        return 0.0, sigma0
    # subtract c rather than add sigma0**2 - 1: avoids cancellation when sigma0 = 1
    denom = 2 * lambda1 - c
    alpha = (lambda1 - c) / denom
    return alpha, math.sqrt(max(0.0, 1 - lambda1**2 / denom))


def component_count(P: Projection) -> int:
    """Connected components (strong components for digraphs) by graph traversal."""
    graph = csr_array(P.adjacency)
    n, _ = connected_components(graph, directed=P.directed, connection="strong")
    return int(n)
