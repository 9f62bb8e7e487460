"""Laplacians of uniform hypergraphs built from high-order random walks."""

from .hypergraph import (
    Hypergraph,
    HypergraphFormatError,
    complete_hypergraph,
    neighborhood,
    parse_hypergraph,
    random_hypergraph,
    read_hypergraph,
    serialize_hypergraph,
    set_degree,
    write_hypergraph,
)
from .metrics import (
    BoundReport,
    PreconditionError,
    diameter_bound_weighted,
    diameter_bounds_directed,
    diameter_reports,
    distance_bound_directed,
    distance_bound_weighted,
    distance_reports,
    expansion_directed,
    expansion_weighted,
    hyper_expansion,
    hyper_expansion_directed,
    hyper_expansion_union,
    s_diameter,
    s_distance,
    set_distance,
)
from .projection import (
    DirectedProjection,
    TupleIndex,
    WeightedProjection,
    build_directed,
    build_projection,
    build_weighted,
)
from .spectra import (
    Spectrum,
    component_count,
    eigenvalues,
    lambda_bar_alpha,
    laplacian,
    laplacian_directed,
    laplacian_weighted,
    optimal_alpha,
    rayleigh_quotient,
    sigma_alpha,
    spectrum,
)
from .walks import (
    WalkTrace,
    evolve,
    mixing_gap,
    mixing_profile,
    sample_s_walk,
    sample_stop_distribution,
    stationary,
    transition_matrix,
)

__version__ = "0.1.0"
