"""Reproducible generators for the benchmark point clouds and trajectories.

Point distributions (all 3D, n points): normal, poisson (integer
coordinates, heavy coincidence), uniform on a box, a deterministic cubic
lattice filling the unit cube, and a random Cantor-type fractal whose
coordinates use only base-4 digits 0 and 3.

Trajectories come from fixed-step RK4 integration of three chaotic flows
(lorenz, rossler, complex butterfly) subsampled to the target length, plus
i.i.d. Gaussian "white noise" as a reference. Every generator is a pure
function of its parameters and seed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

ODE_SYSTEMS = ("lorenz", "rossler", "complex_butterfly")


@dataclass
class PointCloud:
    """An ordered list of d-dimensional points with provenance."""

    points: np.ndarray
    label: str = ""
    seed: int | None = None

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=float)
        if self.points.ndim != 2 or self.points.shape[0] < 1:
            raise ValueError(f"points must be a nonempty (n, d) array, got {self.points.shape}")

    @property
    def d(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]


def gen_normal(n: int, mu: float = 0.0, sigma: float = 1.0, seed: int = 0) -> PointCloud:
    """n i.i.d. 3D points with N(mu, sigma^2) coordinates."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma}")
    rng = np.random.default_rng(seed)
    return PointCloud(rng.normal(mu, sigma, (n, 3)), label="normal", seed=seed)


def gen_poisson(n: int, lam: float = 5.0, seed: int = 0) -> PointCloud:
    """n i.i.d. 3D points with Poisson(lam) integer coordinates.

    Integer coordinates collide often, so many sample points coincide and
    the filtration starts well below n.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if lam <= 0.0:
        raise ValueError(f"lambda must be positive, got {lam}")
    rng = np.random.default_rng(seed)
    return PointCloud(rng.poisson(lam, (n, 3)).astype(float), label="poisson", seed=seed)


def gen_uniform(n: int, low: float = -1.0, high: float = 1.0, seed: int = 0) -> PointCloud:
    """n i.i.d. 3D points uniform on [low, high]^3."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if low >= high:
        raise ValueError(f"need low < high, got [{low}, {high}]")
    rng = np.random.default_rng(seed)
    return PointCloud(rng.uniform(low, high, (n, 3)), label="uniform", seed=seed)


def gen_lattice(n: int) -> PointCloud:
    """Deterministic side^3 grid of equally spaced points filling [0, 1]^3.

    n must be a perfect cube (side = n^(1/3) points per axis, so the spacing
    is 1/(side-1); the 10^3 default grid has spacing 1/9).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    side = round(n ** (1.0 / 3.0))
    if side ** 3 != n:
        lo = side if side ** 3 < n else side - 1
        raise ValueError(
            f"lattice size must be a perfect cube; got {n}, nearest cubes are "
            f"{lo ** 3} and {(lo + 1) ** 3}"
        )
    axis = np.linspace(0.0, 1.0, side) if side > 1 else np.zeros(1)
    gx, gy, gz = np.meshgrid(axis, axis, axis, indexing="ij")
    pts = np.column_stack([gx.ravel(), gy.ravel(), gz.ravel()])
    return PointCloud(pts, label="lattice", seed=None)


def gen_fractal(n: int, terms: int = 100, seed: int = 0) -> PointCloud:
    """n random points of a middle-halves Cantor construction in [0, 1]^3.

    Each coordinate is sum_{i=1..terms} d_i / 4^i with digits d_i drawn
    i.i.d. uniform from {0, 3}, i.e. base-4 expansions avoiding digits 1
    and 2.
    """
    if n < 1 or terms < 1:
        raise ValueError("need n >= 1 and terms >= 1")
    rng = np.random.default_rng(seed)
    digits = rng.integers(0, 2, size=(n, 3, terms)) * 3
    weights = 4.0 ** -np.arange(1, terms + 1)
    return PointCloud((digits * weights).sum(axis=-1), label="fractal", seed=seed)


def gen_white_noise(n: int, seed: int = 0) -> PointCloud:
    """n i.i.d. standard-normal 3D points, labeled as white noise."""
    cloud = gen_normal(n, 0.0, 1.0, seed)
    return PointCloud(cloud.points, label="white_noise", seed=seed)


# --- dynamical systems -----------------------------------------------------


def lorenz_field(state, sigma: float = 10.0, r: float = 28.0, b: float = 8.0 / 3.0):
    x, y, z = state
    return np.array([sigma * (y - x), -x * z + r * x - y, x * y - b * z])


def rossler_field(state, a: float = 0.2, b: float = 0.2, c: float = 5.7):
    x, y, z = state
    return np.array([-y - z, x + a * y, b + z * (x - c)])


def complex_butterfly_field(state, a: float = 0.55):
    x, y, z = state
    return np.array([a * (y - z), -z * np.sign(x), abs(x) - 1.0])


_FIELDS = {
    "lorenz": lorenz_field,
    "rossler": rossler_field,
    "complex_butterfly": complex_butterfly_field,
}

_DEFAULT_INITIAL = {
    "lorenz": (0.0, -0.01, 9.0),
    "rossler": (-9.0, 0.0, 0.0),
    "complex_butterfly": (0.2, 0.0, 0.0),
}


@dataclass
class OdeSpec:
    """Fixed-step integration setup for one of the named flows."""

    system: str
    params: dict = field(default_factory=dict)
    initial: tuple[float, ...] | None = None
    dt: float = 0.01
    steps: int = 10_000
    subsample_stride: int = 10
    burn_in: int = 0

    def __post_init__(self):
        if self.system not in ODE_SYSTEMS:
            raise ValueError(f"unknown system {self.system!r}; expected one of {ODE_SYSTEMS}")
        if self.dt <= 0.0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        if self.subsample_stride < 1 or self.steps < self.subsample_stride:
            raise ValueError("need steps >= subsample_stride >= 1")
        if self.burn_in < 0:
            raise ValueError("burn_in must be >= 0")
        if self.initial is None:
            self.initial = _DEFAULT_INITIAL[self.system]


def integrate(spec: OdeSpec) -> PointCloud:
    """RK4 trajectory of `steps` points from `initial`, subsampled by stride.

    The output keeps every stride-th point of the full trajectory (point k
    of the output is point k*stride), truncated to floor(steps/stride)
    points. An optional burn-in is integrated and discarded first. Raises
    if the state leaves the finite range, reporting the failing step.
    """
    f = _FIELDS[spec.system]
    params = dict(spec.params)
    x = np.asarray(spec.initial, dtype=float)
    dt = spec.dt
    total = spec.burn_in + spec.steps
    traj = np.empty((total, x.size))
    traj[0] = x
    with np.errstate(over="ignore", invalid="ignore"):  # divergence is caught below
        for k in range(1, total):
            k1 = f(x, **params)
            k2 = f(x + 0.5 * dt * k1, **params)
            k3 = f(x + 0.5 * dt * k2, **params)
            k4 = f(x + dt * k3, **params)
            x = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if not np.isfinite(x).all():
                raise ValueError(f"integration of {spec.system} diverged at step {k}")
            traj[k] = x
    kept = traj[spec.burn_in :]
    kept = kept[:: spec.subsample_stride][: spec.steps // spec.subsample_stride]
    return PointCloud(kept, label=spec.system, seed=None)


def perturbed_initial(system: str, seed: int, scale: float = 1e-3) -> tuple[float, ...]:
    """Default initial condition nudged by a seed-derived uniform offset.

    Gives independent realizations of a deterministic flow: each seed
    shifts the canonical starting point by at most `scale` per coordinate.
    """
    base = np.asarray(_DEFAULT_INITIAL[system], dtype=float)
    rng = np.random.default_rng(seed)
    return tuple(base + rng.uniform(-scale, scale, base.size))
