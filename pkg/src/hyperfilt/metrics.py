"""Distance functions and pairwise distance matrices.

Five distances are supported: euclidean, chebyshev, cityblock, minkowski
(configurable exponent p >= 1) and parabolic. The parabolic distance takes
the coordinatewise maximum of |dx_l|**alpha_l with 0 < alpha_l <= 1; it is a
metric (a max of snowflake metrics) but is not homogeneous, so rescaling a
cloud changes its normalized distance matrix, unlike the other four.

Matrices are stored with row convention entries[i][j] = delta(x_i, x_j), so
row i lists distances measured from center i. Only symmetric distances ship,
but nothing downstream assumes symmetry.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

METRIC_KINDS = ("euclidean", "chebyshev", "cityblock", "minkowski", "parabolic")

DEFAULT_MINKOWSKI_P = 3.0
DEFAULT_PARABOLIC_ALPHAS = (1.0, 0.5, 0.5)


@dataclass(frozen=True)
class MetricSpec:
    """A named distance with its parameters.

    p is used by minkowski only; alphas by parabolic only. alphas=None means
    "use the 3D default (1, 1/2, 1/2)", which is an error for non-3D data.
    """

    kind: str
    p: float = DEFAULT_MINKOWSKI_P
    alphas: tuple[float, ...] | None = None

    def __post_init__(self):
        if self.kind not in METRIC_KINDS:
            raise ValueError(f"unknown metric kind {self.kind!r}; expected one of {METRIC_KINDS}")
        if self.kind == "minkowski" and not self.p >= 1.0:
            raise ValueError(f"minkowski exponent must satisfy p >= 1, got {self.p}")
        if self.alphas is not None:
            object.__setattr__(self, "alphas", tuple(float(a) for a in self.alphas))

    def alphas_for_dim(self, dim: int) -> np.ndarray:
        """Resolve the parabolic exponent vector for `dim`-dimensional points."""
        alphas = self.alphas
        if alphas is None:
            if dim != len(DEFAULT_PARABOLIC_ALPHAS):
                raise ValueError(
                    f"parabolic metric needs explicit alphas for dimension {dim}"
                )
            alphas = DEFAULT_PARABOLIC_ALPHAS
        if len(alphas) != dim:
            raise ValueError(f"alphas length {len(alphas)} != point dimension {dim}")
        a = np.asarray(alphas, dtype=float)
        if not ((a > 0.0) & (a <= 1.0)).all():
            raise ValueError(f"parabolic alphas must lie in (0, 1], got {alphas}")
        return a

    @property
    def name(self) -> str:
        return self.kind

    def to_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.kind == "minkowski":
            out["p"] = self.p
        if self.kind == "parabolic" and self.alphas is not None:
            out["alphas"] = list(self.alphas)
        return out

    @classmethod
    def from_dict(cls, d: dict) -> "MetricSpec":
        alphas = d.get("alphas")
        return cls(
            kind=d["kind"],
            p=float(d.get("p", DEFAULT_MINKOWSKI_P)),
            alphas=tuple(alphas) if alphas is not None else None,
        )


@dataclass
class DistanceMatrix:
    """Square nonnegative matrix of pairwise distances with zero diagonal."""

    entries: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        self.entries = np.asarray(self.entries, dtype=float)
        e = self.entries
        if e.ndim != 2 or e.shape[0] != e.shape[1]:
            raise ValueError(f"distance matrix must be square, got shape {e.shape}")
        if not np.isfinite(e).all():
            raise ValueError("distance matrix contains non-finite entries")
        if (e < 0.0).any():
            raise ValueError("distance matrix contains negative entries")
        if np.diagonal(e).any():
            raise ValueError("distance matrix diagonal must be zero")

    @property
    def n(self) -> int:
        return self.entries.shape[0]


def _reduce_diffs(diff: np.ndarray, spec: MetricSpec, dim: int) -> np.ndarray:
    """Collapse an array of |coordinate differences| along its last axis."""
    if spec.kind == "euclidean":
        return np.sqrt((diff ** 2).sum(axis=-1))
    if spec.kind == "chebyshev":
        return diff.max(axis=-1)
    if spec.kind == "cityblock":
        return diff.sum(axis=-1)
    if spec.kind == "minkowski":
        return (diff ** spec.p).sum(axis=-1) ** (1.0 / spec.p)
    if spec.kind == "parabolic":
        return (diff ** spec.alphas_for_dim(dim)).max(axis=-1)
    raise ValueError(f"unknown metric kind {spec.kind!r}")


def distance(a, b, spec: MetricSpec) -> float:
    """Distance between two points under `spec`. Zero iff a == b."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"points must be 1-d and of equal dimension, got {a.shape} vs {b.shape}")
    return float(_reduce_diffs(np.abs(a - b), spec, a.shape[0]))


def pairwise_matrix(cloud, spec: MetricSpec) -> DistanceMatrix:
    """All pairwise distances of a point cloud, rows indexed by center.

    `cloud` is (n, d) array-like or an object with a `.points` attribute.
    The result is symmetric with exact zeros on the diagonal and carries
    normalized=False.
    """
    pts = np.asarray(getattr(cloud, "points", cloud), dtype=float)
    if pts.ndim != 2 or pts.shape[0] == 0:
        raise ValueError(f"point cloud must be a nonempty (n, d) array, got shape {pts.shape}")
    # |x_i - x_j| per coordinate; abs makes the result exactly symmetric
    diff = np.abs(pts[:, None, :] - pts[None, :, :])
    entries = _reduce_diffs(diff, spec, pts.shape[1])
    np.fill_diagonal(entries, 0.0)
    return DistanceMatrix(entries=entries, normalized=False)


def normalize(dm: DistanceMatrix) -> DistanceMatrix:
    """Divide all entries by the maximum entry so the largest becomes 1.

    Idempotent. Raises on an all-zero matrix (all points coincident): there
    is no scale to normalize by.
    """
    peak = dm.entries.max()
    if peak <= 0.0:
        raise ValueError("cannot normalize an all-zero distance matrix")
    return DistanceMatrix(entries=dm.entries / peak, normalized=True)
