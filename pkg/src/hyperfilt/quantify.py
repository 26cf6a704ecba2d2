"""Scalar quantifiers and ensemble comparison for filtration curves.

A curve collapses to two numbers: its L1 norm (sum of |values|, the grid
area content) and its discrete first-order Sobolev seminorm (sum of
successive absolute differences, the slope content). The seminorm has two
spacing modes: ``index`` leaves the differences unweighted (total
variation), ``grid`` divides each difference by the radius step.

Ensembles of curves are summarized by pointwise mean and standard
deviation; two ensembles are compared per radius by the gap between their
mean +/- std bands (zero where the bands overlap), and that gap vector is
itself quantified to a single separation number.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .filtration import FiltrationCurve

SPACING_MODES = ("index", "grid")
QUANTIFIERS = ("L1", "Sobolev")


def _as_samples(curve) -> tuple[np.ndarray, np.ndarray | None]:
    """Accept a FiltrationCurve or a plain value sequence."""
    if isinstance(curve, FiltrationCurve):
        return np.asarray(curve.values, dtype=float), curve.grid
    return np.asarray(curve, dtype=float), None


def l1_norm(curve) -> float:
    """Sum of absolute sample values, no grid-spacing weight."""
    values, _ = _as_samples(curve)
    if values.size == 0:
        raise ValueError("cannot quantify an empty curve")
    return float(np.abs(values).sum())


def sobolev_seminorm(curve, spacing: str = "index", grid=None) -> float:
    """Sum of successive absolute differences, optionally per unit radius.

    spacing="index" is the total variation of the sample sequence;
    spacing="grid" divides each difference by the radius increment and
    needs a grid (taken from the curve when one is passed).
    """
    if spacing not in SPACING_MODES:
        raise ValueError(f"spacing must be one of {SPACING_MODES}, got {spacing!r}")
    values, curve_grid = _as_samples(curve)
    if values.size < 2:
        raise ValueError("sobolev seminorm needs at least two samples")
    jumps = np.abs(np.diff(values))
    if spacing == "index":
        return float(jumps.sum())
    grid = curve_grid if grid is None else np.asarray(grid, dtype=float)
    if grid is None:
        raise ValueError("spacing='grid' needs a radius grid")
    if grid.shape != values.shape:
        raise ValueError("grid and curve must have equal length")
    return float((jumps / np.diff(grid)).sum())


@dataclass
class CurveEnsemble:
    """k curves on one shared grid with pointwise mean and deviation."""

    grid: np.ndarray
    curves: np.ndarray
    mu: np.ndarray
    sigma: np.ndarray
    label: str = ""

    @property
    def k(self) -> int:
        return self.curves.shape[0]


@dataclass
class QuantifierReport:
    """Ensemble mean and std of the per-curve L1 and Sobolev quantifiers."""

    L_mean: float
    L_std: float
    S_mean: float
    S_std: float


def ensemble_stats(curves, label: str = "", sample_std: bool = False) -> CurveEnsemble:
    """Stack curves sharing a grid; population std by default (ddof=0)."""
    curves = list(curves)
    if not curves:
        raise ValueError("ensemble needs at least one curve")
    grid = np.asarray(curves[0].grid, dtype=float)
    stack = np.empty((len(curves), grid.size))
    for i, c in enumerate(curves):
        if c.grid.shape != grid.shape or not np.array_equal(c.grid, grid):
            raise ValueError("all ensemble curves must share one radius grid")
        stack[i] = c.values
    ddof = 1 if sample_std else 0
    sigma = stack.std(axis=0, ddof=ddof) if stack.shape[0] > ddof else np.zeros(grid.size)
    return CurveEnsemble(grid=grid, curves=stack, mu=stack.mean(axis=0), sigma=sigma, label=label)


def quantifier_report(ens: CurveEnsemble, spacing: str = "index") -> QuantifierReport:
    """Per-curve L1 and Sobolev quantifiers reduced to ensemble mean/std."""
    ls = np.array([l1_norm(c) for c in ens.curves])
    ss = np.array([sobolev_seminorm(c, spacing=spacing, grid=ens.grid) for c in ens.curves])
    return QuantifierReport(
        L_mean=float(ls.mean()), L_std=float(ls.std()),
        S_mean=float(ss.mean()), S_std=float(ss.std()),
    )


def _check_shared_grid(a: CurveEnsemble, b: CurveEnsemble) -> None:
    if a.grid.shape != b.grid.shape or not np.array_equal(a.grid, b.grid):
        raise ValueError("ensembles must share one radius grid")


def band_distance(a: CurveEnsemble, b: CurveEnsemble) -> np.ndarray:
    """Per-radius gap between the two mean +/- std bands, 0 on overlap.

    At each radius the bands are [mu - sigma, mu + sigma]; when disjoint
    the distance is the lower edge of the higher band minus the upper edge
    of the lower band, which makes the result symmetric and nonnegative.
    """
    _check_shared_grid(a, b)
    gap = np.maximum((a.mu - a.sigma) - (b.mu + b.sigma),
                     (b.mu - b.sigma) - (a.mu + a.sigma))
    return np.maximum(gap, 0.0)


def system_distance(a: CurveEnsemble, b: CurveEnsemble, quantifier: str = "L1",
                    spacing: str = "index") -> float:
    """Single separation number: a curve quantifier of the band-gap vector."""
    d = band_distance(a, b)
    if quantifier == "L1":
        return l1_norm(d)
    if quantifier == "Sobolev":
        return sobolev_seminorm(d, spacing=spacing, grid=a.grid)
    raise ValueError(f"quantifier must be one of {QUANTIFIERS}, got {quantifier!r}")


def distance_matrix(ensembles, quantifier: str = "L1", spacing: str = "index") -> np.ndarray:
    """Symmetric matrix of pairwise ensemble separations, zero diagonal."""
    ensembles = list(ensembles)
    k = len(ensembles)
    out = np.zeros((k, k))
    for i in range(k):
        for j in range(i + 1, k):
            d = system_distance(ensembles[i], ensembles[j], quantifier, spacing)
            out[i, j] = out[j, i] = d
    return out
