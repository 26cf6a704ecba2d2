"""Hypergraph filtration of point clouds under swappable distances.

Sweep a radius over a normalized distance matrix, collect the distinct
ball-hyperedges at each radius, and quantify the resulting count curves to
tell point distributions and dynamical systems apart.
"""

from .datagen import (
    OdeSpec,
    PointCloud,
    gen_fractal,
    gen_lattice,
    gen_normal,
    gen_poisson,
    gen_uniform,
    gen_white_noise,
    integrate,
    perturbed_initial,
)
from .estimator import HypergraphFiltration, validate_clouds
from .filtration import (
    DEFAULT_GRID,
    FiltrationCurve,
    IncidenceMatrix,
    adjacency_at,
    degree,
    filtration_curve,
    hyperedges_at,
    make_grid,
    membership_at,
)
from .metrics import DistanceMatrix, MetricSpec, distance, normalize, pairwise_matrix
from .quantify import (
    CurveEnsemble,
    QuantifierReport,
    band_distance,
    distance_matrix,
    ensemble_stats,
    l1_norm,
    quantifier_report,
    sobolev_seminorm,
    system_distance,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_GRID",
    "CurveEnsemble",
    "DistanceMatrix",
    "FiltrationCurve",
    "HypergraphFiltration",
    "IncidenceMatrix",
    "MetricSpec",
    "OdeSpec",
    "PointCloud",
    "QuantifierReport",
    "adjacency_at",
    "band_distance",
    "degree",
    "distance",
    "distance_matrix",
    "ensemble_stats",
    "filtration_curve",
    "gen_fractal",
    "gen_lattice",
    "gen_normal",
    "gen_poisson",
    "gen_uniform",
    "gen_white_noise",
    "hyperedges_at",
    "integrate",
    "l1_norm",
    "make_grid",
    "membership_at",
    "normalize",
    "pairwise_matrix",
    "perturbed_initial",
    "quantifier_report",
    "sobolev_seminorm",
    "system_distance",
    "validate_clouds",
]
