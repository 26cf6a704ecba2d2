"""CSV and JSON readers/writers for clouds, curves, tables and matrices.

All CSV files use '.' as the decimal separator, '\\n' line endings and
UTF-8. Floats are written with Python's shortest round-trip repr so files
are byte-identical across runs and re-read losslessly.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path

import numpy as np

from .datagen import PointCloud
from .filtration import FiltrationCurve
from .quantify import CurveEnsemble, ensemble_stats


def _open_w(path):
    return open(path, "w", encoding="utf-8", newline="\n")


def _fmt(x) -> str:
    return repr(float(x))


def write_cloud_csv(cloud: PointCloud, path) -> None:
    """One point per row under a x1,...,xd header."""
    with _open_w(path) as fh:
        w = csv.writer(fh)
        w.writerow([f"x{i + 1}" for i in range(cloud.d)])
        for row in cloud.points:
            w.writerow([_fmt(v) for v in row])


def read_cloud_csv(path, label: str = "") -> PointCloud:
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    if not rows or not rows[0] or not rows[0][0].startswith("x"):
        raise ValueError(f"{path}: expected a x1,...,xd header")
    pts = np.array([[float(v) for v in row] for row in rows[1:]])
    return PointCloud(pts, label=label or Path(path).stem)


def write_cloud_json(cloud: PointCloud, path) -> None:
    record = {
        "label": cloud.label,
        "seed": cloud.seed,
        "points": [[float(v) for v in row] for row in cloud.points],
    }
    with _open_w(path) as fh:
        json.dump(record, fh)
        fh.write("\n")


def read_cloud_json(path) -> PointCloud:
    with open(path, encoding="utf-8") as fh:
        record = json.load(fh)
    return PointCloud(np.array(record["points"], dtype=float),
                      label=record.get("label", ""), seed=record.get("seed"))


def write_curve_csv(curve: FiltrationCurve, path) -> None:
    """Single curve: columns r, delta_e."""
    with _open_w(path) as fh:
        w = csv.writer(fh)
        w.writerow(["r", "delta_e"])
        for r, v in zip(curve.grid, curve.values):
            w.writerow([_fmt(r), int(v)])


def read_curve_csv(path) -> FiltrationCurve:
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    grid = [float(r[0]) for r in rows[1:]]
    values = [int(r[1]) for r in rows[1:]]
    return FiltrationCurve(grid=np.array(grid), values=np.array(values))


def write_ensemble_csv(curves: list[FiltrationCurve], path) -> None:
    """Curve ensemble: columns r, delta_e, realization."""
    with _open_w(path) as fh:
        w = csv.writer(fh)
        w.writerow(["r", "delta_e", "realization"])
        for k, curve in enumerate(curves):
            for r, v in zip(curve.grid, curve.values):
                w.writerow([_fmt(r), int(v), k])


def read_ensemble_csv(path, label: str = "") -> CurveEnsemble:
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.reader(fh))[1:]
    by_realization: dict[int, list[tuple[float, int]]] = {}
    for r, v, k in rows:
        by_realization.setdefault(int(k), []).append((float(r), int(v)))
    curves = []
    for k in sorted(by_realization):
        pairs = by_realization[k]
        curves.append(FiltrationCurve(grid=np.array([p[0] for p in pairs]),
                                      values=np.array([p[1] for p in pairs])))
    return ensemble_stats(curves, label=label or Path(path).stem)


def write_summary_csv(ens: CurveEnsemble, path) -> None:
    """Ensemble summary: columns r, mu, sigma (the band-plot data)."""
    with _open_w(path) as fh:
        w = csv.writer(fh)
        w.writerow(["r", "mu", "sigma"])
        for r, m, s in zip(ens.grid, ens.mu, ens.sigma):
            w.writerow([_fmt(r), _fmt(m), _fmt(s)])


def read_summary_csv(path) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Returns (grid, mu, sigma) from a summary file."""
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.reader(fh))[1:]
    cols = np.array([[float(v) for v in row] for row in rows])
    return cols[:, 0], cols[:, 1], cols[:, 2]


def write_quantifier_table_csv(rows: list[dict], path) -> None:
    """Quantifier table: one row per (dataset, metric)."""
    with _open_w(path) as fh:
        w = csv.writer(fh)
        w.writerow(["dataset", "metric", "L_mean", "L_std", "S_mean", "S_std"])
        for row in rows:
            w.writerow([row["dataset"], row["metric"],
                        _fmt(row["L_mean"]), _fmt(row["L_std"]),
                        _fmt(row["S_mean"]), _fmt(row["S_std"])])


def read_quantifier_table_csv(path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        rows = []
        for raw in reader:
            row = dict(raw)
            for key in ("L_mean", "L_std", "S_mean", "S_std"):
                row[key] = float(row[key])
            rows.append(row)
    return rows


def write_distance_matrix_csv(labels: list[str], matrix: np.ndarray, path) -> None:
    """Labeled symmetric matrix: header row and leading label column."""
    with _open_w(path) as fh:
        w = csv.writer(fh)
        w.writerow(["label"] + list(labels))
        for lab, row in zip(labels, matrix):
            w.writerow([lab] + [_fmt(v) for v in row])


def read_distance_matrix_csv(path) -> tuple[list[str], np.ndarray]:
    with open(path, encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    labels = rows[0][1:]
    matrix = np.array([[float(v) for v in row[1:]] for row in rows[1:]])
    return labels, matrix


def write_json(obj, path) -> None:
    with _open_w(path) as fh:
        json.dump(obj, fh, indent=2, sort_keys=True)
        fh.write("\n")
