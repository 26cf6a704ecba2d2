"""Radius-swept ball hypergraphs over a distance matrix.

For each radius r, every point x_i spawns the hyperedge
e_i(r) = { x_j : delta(x_i, x_j) < r }. Membership uses a strict inequality,
so a pair exactly at distance r is excluded; the center itself is always a
member. Hyperedges with identical membership are merged, and the count of
distinct hyperedges m(r) is the curve value at r.

As r grows each e_i(r) only gains members, so the family of hypergraphs is
a filtration running from all-singletons (m = number of distinct points) to
the single full hyperedge (m = 1) once r exceeds the largest distance.

Two implementations of the sweep are provided and tested against each other
and against a brute-force oracle:

* ``direct``: per radius, threshold the matrix, pack rows to bytes, count
  unique rows.
* ``incremental``: sort all pair distances once, maintain one arbitrary-
  precision int bitmask per row, flip bits as pairs cross the threshold and
  count distinct masks with a hash set. This avoids re-thresholding and is
  the default.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metrics import DistanceMatrix


def make_grid(start: float, step: float, stop: float) -> np.ndarray:
    """Strictly increasing radius grid start, start+step, ..., stop.

    Built with linspace so both endpoints are exact; in particular a grid
    ending at 1.0 hits 1.0 exactly, which matters for the strict-inequality
    boundary on normalized matrices.
    """
    if not (start > 0.0 and step > 0.0 and stop >= start):
        raise ValueError(f"need start > 0, step > 0, stop >= start; got {start}:{step}:{stop}")
    span = (stop - start) / step
    nearest = round(span)
    if abs(span - nearest) <= 1e-6 * max(1.0, abs(span)):
        # commensurate: snap the last point onto stop itself
        count, last = int(nearest) + 1, stop
    else:
        count = int(span) + 1
        last = start + step * (count - 1)
    return np.linspace(start, last, count)


DEFAULT_GRID = make_grid(0.01, 0.01, 1.0)


def _check_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("radius grid must be a nonempty 1-d sequence")
    if grid[0] <= 0.0 or (np.diff(grid) <= 0.0).any():
        raise ValueError("radius grid must be strictly increasing and positive")
    return grid


@dataclass
class IncidenceMatrix:
    """The distinct hyperedges at one radius, one membership row per edge.

    memberships is a boolean (m, n) array whose rows are pairwise distinct;
    column j of row k tells whether vertex j belongs to edge k.
    """

    memberships: np.ndarray
    r: float

    @property
    def n(self) -> int:
        return self.memberships.shape[1]

    @property
    def m(self) -> int:
        return self.memberships.shape[0]


@dataclass
class FiltrationCurve:
    """Distinct-hyperedge counts sampled over a radius grid."""

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values, dtype=np.int64)
        if self.grid.shape != self.values.shape:
            raise ValueError("grid and values must have equal length")

    def __len__(self) -> int:
        return self.grid.size


def membership_at(dm: DistanceMatrix, r: float) -> np.ndarray:
    """Boolean ball-membership matrix at radius r, before deduplication.

    Row i is the hyperedge of center i: entry (i, j) is delta(x_i, x_j) < r,
    with the diagonal forced true. Works for asymmetric matrices too since
    membership always measures from the center (row index).
    """
    if not r > 0.0:
        raise ValueError(f"radius must be positive, got {r}")
    m = dm.entries < r
    np.fill_diagonal(m, True)
    return m


def hyperedges_at(dm: DistanceMatrix, r: float) -> IncidenceMatrix:
    """Distinct hyperedges at radius r (membership rows, duplicates merged)."""
    rows = membership_at(dm, r)
    packed = np.packbits(rows, axis=1)
    _, keep = np.unique(packed, axis=0, return_index=True)
    return IncidenceMatrix(memberships=rows[np.sort(keep)], r=float(r))


def degree(inc: IncidenceMatrix) -> int:
    """Number of distinct hyperedges m(r) of an incidence matrix."""
    return inc.m


def adjacency_at(dm: DistanceMatrix, r: float) -> np.ndarray:
    """Binary adjacency matrix at radius r: entry (i, j) says x_i is in e_j.

    Membership of x_i in e_j is delta(x_j, x_i) < r, i.e. the transpose
    threshold; the diagonal is 1. Symmetric whenever the matrix is.
    """
    if not r > 0.0:
        raise ValueError(f"radius must be positive, got {r}")
    a = (dm.entries.T < r).astype(np.int8)
    np.fill_diagonal(a, 1)
    return a


def _curve_direct(entries: np.ndarray, grid: np.ndarray) -> np.ndarray:
    out = np.empty(grid.size, dtype=np.int64)
    for k, r in enumerate(grid):
        rows = entries < r
        np.fill_diagonal(rows, True)
        packed = np.packbits(rows, axis=1)
        out[k] = np.unique(packed, axis=0).shape[0]
    return out


def _curve_incremental(entries: np.ndarray, grid: np.ndarray) -> np.ndarray:
    n = entries.shape[0]
    iu, ju = np.triu_indices(n, 1)
    dvals = entries[iu, ju]
    # symmetric read-out of (i, j) and (j, i); asymmetric matrices need the
    # full pair list
    if not np.array_equal(entries, entries.T):
        lo, hi = np.tril_indices(n, -1)
        iu = np.concatenate([iu, lo])
        ju = np.concatenate([ju, hi])
        dvals = np.concatenate([dvals, entries[lo, hi]])
        sym = False
    else:
        sym = True
    order = np.argsort(dvals, kind="stable")
    iu, ju, dvals = iu[order], ju[order], dvals[order]

    rows = [1 << i for i in range(n)]
    out = np.empty(grid.size, dtype=np.int64)
    k, total = 0, dvals.size
    for g, r in enumerate(grid):
        while k < total and dvals[k] < r:
            i, j = int(iu[k]), int(ju[k])
            rows[i] |= 1 << j
            if sym:
                rows[j] |= 1 << i
            k += 1
        out[g] = len(set(rows))
    return out


def filtration_curve(dm: DistanceMatrix, grid=None, method: str = "incremental") -> FiltrationCurve:
    """Distinct-hyperedge count at every radius of the grid.

    Extensionally equal to [degree(hyperedges_at(dm, r)) for r in grid]
    whichever method runs; ``direct`` recomputes per radius, ``incremental``
    sweeps sorted pair distances.
    """
    grid = _check_grid(DEFAULT_GRID if grid is None else grid)
    if method == "direct":
        values = _curve_direct(dm.entries, grid)
    elif method == "incremental":
        values = _curve_incremental(dm.entries, grid)
    else:
        raise ValueError(f"unknown method {method!r}; expected 'direct' or 'incremental'")
    return FiltrationCurve(grid=grid, values=values)
