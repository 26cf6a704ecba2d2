"""Command line pipeline: generate, analyze, quantify, compare.

The pipeline is file-based and deterministic: `generate` writes one point
CSV per (dataset, realization), `analyze` turns those into curve ensembles
and band summaries, `quantify` reduces ensembles to the L1/Sobolev table,
and `compare` writes pairwise ensemble-separation matrices. `show-config`
prints the effective configuration as JSON. Independent tasks run on a
thread pool capped by the HYPERFILT_THREADS environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from .config import RunConfig, config_grid, dataset_label, realize_dataset
from .filtration import filtration_curve
from .io import (
    read_cloud_csv,
    read_ensemble_csv,
    write_cloud_csv,
    write_distance_matrix_csv,
    write_ensemble_csv,
    write_quantifier_table_csv,
    write_summary_csv,
)
from .metrics import normalize, pairwise_matrix
from .quantify import QUANTIFIERS, ensemble_stats, distance_matrix, quantifier_report


def thread_count() -> int:
    env = os.environ.get("HYPERFILT_THREADS")
    if env:
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _run_tasks(fn, items):
    """Run fn over items on the shared pool; returns results in item order."""
    workers = thread_count()
    if workers == 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _out_dirs(config: RunConfig) -> dict[str, Path]:
    root = Path(config.output_dir)
    dirs = {name: root / name for name in ("points", "curves", "tables", "distances")}
    for d in dirs.values():
        d.mkdir(parents=True, exist_ok=True)
    return dirs


def _points_path(dirs, label: str, realization: int) -> Path:
    return dirs["points"] / f"{label}_{realization}.csv"


def _curves_path(dirs, label: str, metric: str) -> Path:
    return dirs["curves"] / f"{label}_{metric}.csv"


def cmd_generate(config: RunConfig) -> int:
    dirs = _out_dirs(config)

    def task(item):
        spec, k = item
        cloud = realize_dataset(spec, k, config.base_seed)
        write_cloud_csv(cloud, _points_path(dirs, dataset_label(spec), k))

    items = [(spec, k) for spec in config.datasets for k in range(config.realizations)]
    _run_tasks(task, items)
    print(f"wrote {len(items)} point files to {dirs['points']}")
    return 0


def cmd_analyze(config: RunConfig) -> int:
    dirs = _out_dirs(config)
    grid = config_grid(config)
    specs = config.metric_specs()

    def task(item):
        dataset, metric = item
        label = dataset_label(dataset)
        curves = []
        for k in range(config.realizations):
            path = _points_path(dirs, label, k)
            if not path.exists():
                raise FileNotFoundError(f"missing dataset file {path}; run `generate` first")
            cloud = read_cloud_csv(path, label=label)
            dm = pairwise_matrix(cloud, metric)
            if config.normalize:
                dm = normalize(dm)
            curves.append(filtration_curve(dm, grid))
        ens = ensemble_stats(curves, label=label)
        write_ensemble_csv(curves, _curves_path(dirs, label, metric.name))
        write_summary_csv(ens, dirs["curves"] / f"{label}_{metric.name}_summary.csv")

    items = [(d, m) for d in config.datasets for m in specs]
    _run_tasks(task, items)
    print(f"wrote {2 * len(items)} curve files to {dirs['curves']}")
    return 0


def cmd_quantify(config: RunConfig) -> int:
    dirs = _out_dirs(config)
    rows = []
    for dataset in config.datasets:
        label = dataset_label(dataset)
        for metric in config.metric_specs():
            path = _curves_path(dirs, label, metric.name)
            if not path.exists():
                raise FileNotFoundError(f"missing curve file {path}; run `analyze` first")
            ens = read_ensemble_csv(path, label=label)
            report = quantifier_report(ens, spacing=config.spacing_mode)
            rows.append({
                "dataset": label, "metric": metric.name,
                "L_mean": report.L_mean, "L_std": report.L_std,
                "S_mean": report.S_mean, "S_std": report.S_std,
            })
    out = dirs["tables"] / "quantifiers.csv"
    write_quantifier_table_csv(rows, out)
    print(f"wrote {out}")
    return 0


def cmd_compare(config: RunConfig, group: list[str] | None = None) -> int:
    dirs = _out_dirs(config)
    labels = group or [dataset_label(d) for d in config.datasets]
    for metric in config.metric_specs():
        ensembles = []
        for label in labels:
            path = _curves_path(dirs, label, metric.name)
            if not path.exists():
                raise FileNotFoundError(f"missing curve file {path}; run `analyze` first")
            ensembles.append(read_ensemble_csv(path, label=label))
        for quantifier in QUANTIFIERS:
            mat = distance_matrix(ensembles, quantifier=quantifier, spacing=config.spacing_mode)
            out = dirs["distances"] / f"{metric.name}_{quantifier}.csv"
            write_distance_matrix_csv(labels, mat, out)
    print(f"wrote {len(config.metrics) * len(QUANTIFIERS)} distance matrices to {dirs['distances']}")
    return 0


def cmd_show_config(config: RunConfig) -> int:
    print(json.dumps(config.to_dict(), indent=2, sort_keys=True))
    return 0


def _parse_grid(text: str) -> dict:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"grid must be start:step:stop, got {text!r}")
    start, step, stop = (float(p) for p in parts)
    return {"start": start, "step": step, "stop": stop}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfilt",
        description="Hypergraph filtration pipeline for point clouds and trajectories",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("generate", "analyze", "quantify", "compare", "show-config"):
        p = sub.add_parser(name)
        p.add_argument("--config", type=Path, help="JSON run configuration")
        p.add_argument("--metric", action="append", dest="metrics",
                       choices=["euclidean", "chebyshev", "cityblock", "minkowski", "parabolic"],
                       help="restrict to this metric (repeatable)")
        p.add_argument("--grid", type=_parse_grid, help="radius grid start:step:stop")
        p.add_argument("--realizations", type=int)
        p.add_argument("--seed", type=int, help="base RNG seed")
        p.add_argument("--no-normalize", action="store_true",
                       help="skip dividing distance matrices by their maximum")
        p.add_argument("--spacing", choices=["grid", "index"],
                       help="sobolev spacing mode for tables and comparisons")
        p.add_argument("--paper-scale", action="store_true",
                       help="use 100 realizations instead of the desk-scale default")
        p.add_argument("--out", type=Path, help="output directory")
        if name == "compare":
            p.add_argument("--group", help="comma-separated dataset labels to compare")
    return parser


def config_from_args(args) -> RunConfig:
    config = RunConfig.load(args.config) if args.config else RunConfig()
    if args.metrics:
        wanted = list(dict.fromkeys(args.metrics))
        by_kind = {m["kind"]: m for m in config.metrics}
        config.metrics = [by_kind.get(kind, {"kind": kind}) for kind in wanted]
    if args.grid:
        config.grid = args.grid
    if args.realizations is not None:
        config.realizations = args.realizations
    if args.seed is not None:
        config.base_seed = args.seed
    if args.no_normalize:
        config.normalize = False
    if args.spacing:
        config.spacing_mode = args.spacing
    if args.paper_scale:
        config.realizations = 100
    if args.out:
        config.output_dir = str(args.out)
    return RunConfig.from_dict(config.to_dict())  # re-validate after overrides


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = config_from_args(args)
        if args.command == "generate":
            return cmd_generate(config)
        if args.command == "analyze":
            return cmd_analyze(config)
        if args.command == "quantify":
            return cmd_quantify(config)
        if args.command == "compare":
            group = args.group.split(",") if getattr(args, "group", None) else None
            return cmd_compare(config, group)
        if args.command == "show-config":
            return cmd_show_config(config)
        raise ValueError(f"unknown command {args.command!r}")
    except Exception as exc:  # surface task failures as a nonzero exit
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
