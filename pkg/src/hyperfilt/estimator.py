"""Scikit-learn style transformer turning point clouds into curve features.

Each sample is one whole point cloud; transform maps a collection of clouds
to the integer matrix of their filtration curves (one row per cloud, one
column per grid radius), ready for any downstream sklearn classifier or
pipeline step.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from .filtration import filtration_curve, make_grid
from .metrics import MetricSpec, normalize, pairwise_matrix


def validate_clouds(X) -> list[np.ndarray]:
    """Coerce a cloud collection to a list of float (n_i, d) arrays.

    Accepts a 3D array (k, n, d), a list of 2D arrays with a shared last
    dimension, or objects carrying a ``.points`` attribute.
    """
    if isinstance(X, np.ndarray) and X.ndim == 3:
        X = list(X)
    if isinstance(X, np.ndarray) and X.ndim == 2:
        raise ValueError(
            "expected a collection of point clouds; wrap a single (n, d) cloud as [cloud]"
        )
    clouds = []
    dim = None
    for item in X:
        pts = np.asarray(getattr(item, "points", item), dtype=float)
        if pts.ndim != 2 or pts.shape[0] == 0:
            raise ValueError(f"each cloud must be a nonempty (n, d) array, got {pts.shape}")
        if not np.isfinite(pts).all():
            raise ValueError("clouds must contain only finite coordinates")
        if dim is None:
            dim = pts.shape[1]
        elif pts.shape[1] != dim:
            raise ValueError(f"all clouds must share one dimension, got {pts.shape[1]} and {dim}")
        clouds.append(pts)
    if not clouds:
        raise ValueError("empty cloud collection")
    return clouds


class HypergraphFiltration(BaseEstimator, TransformerMixin):
    """Extract per-cloud filtration curves as fixed-length feature vectors.

    Parameters
    ----------
    metric : str, default "euclidean"
        One of euclidean, chebyshev, cityblock, minkowski, parabolic.
    p : float, default 3.0
        Minkowski exponent (>= 1), used when metric="minkowski".
    alphas : sequence of float or None
        Per-coordinate exponents in (0, 1] for metric="parabolic"; None
        selects (1, 1/2, 1/2) for 3D data.
    grid_start, grid_step, grid_stop : float
        Radius grid specification, default 0.01:0.01:1.0 (100 radii).
    normalize : bool, default True
        Divide each cloud's distance matrix by its maximum entry so the
        radius range (0, 1] spans the whole filtration regardless of scale.

    Attributes
    ----------
    grid_ : ndarray of shape (n_radii,)
        The radius grid fixed at fit time.
    n_features_out_ : int
        Number of output columns (= grid size).
    """

    def __init__(self, metric="euclidean", p=3.0, alphas=None,
                 grid_start=0.01, grid_step=0.01, grid_stop=1.0, normalize=True):
        self.metric = metric
        self.p = p
        self.alphas = alphas
        self.grid_start = grid_start
        self.grid_step = grid_step
        self.grid_stop = grid_stop
        self.normalize = normalize

    def _spec(self) -> MetricSpec:
        alphas = None if self.alphas is None else tuple(self.alphas)
        return MetricSpec(kind=self.metric, p=self.p, alphas=alphas)

    def fit(self, X, y=None):
        validate_clouds(X)
        self._spec()  # fail fast on bad metric parameters
        self.grid_ = make_grid(self.grid_start, self.grid_step, self.grid_stop)
        self.n_features_out_ = self.grid_.size
        return self

    def transform(self, X) -> np.ndarray:
        if not hasattr(self, "grid_"):
            raise NotFittedError("this HypergraphFiltration instance is not fitted yet")
        clouds = validate_clouds(X)
        spec = self._spec()
        out = np.empty((len(clouds), self.grid_.size), dtype=np.int64)
        for i, pts in enumerate(clouds):
            dm = pairwise_matrix(pts, spec)
            if self.normalize:
                dm = normalize(dm)
            out[i] = filtration_curve(dm, self.grid_).values
        return out
