"""Command-line entry point: a thin client over the service.

    arc-objects augment --task diagonal_flip --seed 7 --train 100 --eval 20 --out DIR
    arc-objects cluster grid.json [--eps 3.6] [--min-pts 1] [--debug] [--out DIR]
    arc-objects evalpnp [FIXTURE_DIR] [--out DIR]
    arc-objects inspect train.jsonl --index 0

Exit codes: 0 success, 1 usage, 2 data error, 3 internal. Flag values
override --config file values, which override defaults. All commands run
against an in-process service instance unless --server points elsewhere.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .client import make_client
from .pnp import DEFAULT_EPS, DEFAULT_MIN_PTS

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class UsageError(Exception):
    pass


class DataError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    task: str | None = None
    seed: int = 0
    train: int = 10000
    eval: int = 2000
    experts: str | None = None
    eps: float = DEFAULT_EPS
    min_pts: int = DEFAULT_MIN_PTS
    jobs: int = 1
    out: str = "."
    pnp: bool = False

    def validate(self) -> "RunConfig":
        if self.train < 1 or self.eval < 1:
            raise UsageError(f"dataset sizes must be >= 1, got train={self.train} eval={self.eval}")
        if self.eps <= 0:
            raise UsageError(f"--eps must be > 0, got {self.eps}")
        if self.min_pts < 1:
            raise UsageError(f"--min-pts must be >= 1, got {self.min_pts}")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {self.jobs}")
        if self.experts is not None and not Path(self.experts).exists():
            raise UsageError(f"expert file {self.experts} does not exist")
        return self


_CONFIG_KEYS = {
    "task": str,
    "seed": int,
    "train": int,
    "eval": int,
    "experts": str,
    "eps": float,
    "min_pts": int,
    "jobs": int,
    "out": str,
    "pnp": bool,
}


def _load_config_file(path: str) -> dict:
    file = Path(path)
    if not file.exists():
        raise UsageError(f"config file {path} does not exist")
    try:
        data = json.loads(file.read_text(encoding="utf-8"))
    except ValueError as e:
        raise DataError(f"config file {path} is not valid JSON: {e}") from None
    if not isinstance(data, dict):
        raise DataError(f"config file {path} must hold a JSON object")
    for key, value in data.items():
        if key not in _CONFIG_KEYS:
            raise DataError(f"config file {path}: unknown key {key!r}")
        expected = _CONFIG_KEYS[key]
        ok = isinstance(value, expected) and not (expected is not bool and isinstance(value, bool))
        if expected is float:
            ok = isinstance(value, (int, float)) and not isinstance(value, bool)
        if not ok:
            raise DataError(f"config file {path}: {key} must be {expected.__name__}")
    return data


def resolve_config(args: argparse.Namespace) -> RunConfig:
    """Three-layer precedence: explicit flags, then config file, then defaults."""
    layered: dict = {}
    if getattr(args, "config", None):
        layered.update(_load_config_file(args.config))
    for key in _CONFIG_KEYS:
        value = getattr(args, key, None)
        if value is not None and value is not False:
            layered[key] = value
    return RunConfig(**layered).validate()


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # usage problems must exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> _Parser:
    parser = _Parser(prog="arc-objects", description=__doc__.splitlines()[0])
    parser.add_argument("--server", help="service URL (default: run in-process)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--eps", type=float, help=f"clustering radius (default {DEFAULT_EPS})")
        p.add_argument("--min-pts", dest="min_pts", type=int, help="DBSCAN core threshold (default 1)")
        p.add_argument("--config", help="JSON config file; flags override it")
        p.add_argument("--out", help="output directory")

    p_augment = sub.add_parser("augment", help="generate a trajectory dataset")
    p_augment.add_argument("--task", help="one of diagonal_flip, tetris, gravity, stretch")
    p_augment.add_argument("--seed", type=int, help="master seed (default 0)")
    p_augment.add_argument("--train", type=int, help="training records (default 10000)")
    p_augment.add_argument("--eval", type=int, help="eval pairs (default 2000)")
    p_augment.add_argument("--experts", help="expert trace file (default: bundled for the task)")
    p_augment.add_argument("--jobs", type=int, help="worker threads (default 1)")
    p_augment.add_argument("--pnp", action="store_true", default=None,
                           help="annotate every step with its cluster map")
    common(p_augment)

    p_cluster = sub.add_parser("cluster", help="cluster one grid (JSON matrix file)")
    p_cluster.add_argument("grid_file")
    p_cluster.add_argument("--debug", action="store_true",
                           help="include node positions before/after the force pass")
    common(p_cluster)

    p_eval = sub.add_parser("evalpnp", help="evaluate clustering on a labeled fixture corpus")
    p_eval.add_argument("fixtures", nargs="?", default=None,
                        help="fixture directory (default: bundled corpus)")
    common(p_eval)

    p_inspect = sub.add_parser("inspect", help="print one dataset record")
    p_inspect.add_argument("dataset")
    p_inspect.add_argument("--index", type=int, default=0)
    common(p_inspect)

    return parser


def _check_response(response) -> dict:
    if response.status_code == 200:
        return response.json()
    try:
        payload = response.json()
    except ValueError:
        payload = {}
    if response.status_code == 422 and "error" in payload:
        raise DataError(f"{payload['error']}: {payload['detail']}")
    if response.status_code == 422:
        raise UsageError(f"invalid request: {payload.get('detail')}")
    raise RuntimeError(f"service returned {response.status_code}: {response.text[:500]}")


def _cmd_augment(client, args) -> int:
    config = resolve_config(args)
    if config.task is None:
        raise UsageError("augment requires --task (or a config file providing it)")
    body = {
        "task": config.task,
        "seed": config.seed,
        "train": config.train,
        "eval": config.eval,
        "out": config.out,
        "experts": config.experts,
        "eps": config.eps,
        "min_pts": config.min_pts,
        "pnp": config.pnp,
        "jobs": config.jobs,
    }
    manifest = _check_response(client.post("/augment", json=body))["manifest"]
    counts = manifest["counts"]
    print(
        f"wrote {counts['train']} train records and {counts['eval']} eval pairs to {config.out}"
    )
    print(f"config hash {manifest['config_hash'][:12]}")
    return EXIT_OK


def _cmd_cluster(client, args) -> int:
    config = resolve_config(args)
    grid_file = Path(args.grid_file)
    if not grid_file.exists():
        raise UsageError(f"grid file {grid_file} does not exist")
    try:
        grid = json.loads(grid_file.read_text(encoding="utf-8"))
    except ValueError as e:
        raise DataError(f"grid file {grid_file} is not valid JSON: {e}") from None
    body = {"grid": grid, "eps": config.eps, "min_pts": config.min_pts, "debug": args.debug}
    payload = _check_response(client.post("/cluster", json=body))
    text = json.dumps(payload if args.debug else payload["map"])
    if args.out:
        out_dir = Path(config.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "cluster_map.json").write_text(text + "\n", encoding="utf-8")
        print(f"wrote {out_dir / 'cluster_map.json'}")
    else:
        print(text)
    return EXIT_OK


def _cmd_evalpnp(client, args) -> int:
    config = resolve_config(args)
    body = {"fixtures": args.fixtures, "eps": config.eps, "min_pts": config.min_pts}
    payload = _check_response(client.post("/evalpnp", json=body))
    print(payload["text"])
    if args.out:
        out_dir = Path(config.out)
        out_dir.mkdir(parents=True, exist_ok=True)
        (out_dir / "report.json").write_text(
            json.dumps(payload["report"], indent=2) + "\n", encoding="utf-8"
        )
        print(f"wrote {out_dir / 'report.json'}")
    return EXIT_OK


def _cmd_inspect(client, args) -> int:
    dataset = Path(args.dataset)
    if not dataset.exists():
        raise UsageError(f"dataset {dataset} does not exist")
    if args.index < 0:
        raise UsageError(f"--index must be >= 0, got {args.index}")
    payload = _check_response(client.post("/inspect", json={"path": str(dataset), "index": args.index}))
    print(payload["text"])
    return EXIT_OK


_COMMANDS = {
    "augment": _cmd_augment,
    "cluster": _cmd_cluster,
    "evalpnp": _cmd_evalpnp,
    "inspect": _cmd_inspect,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        with make_client(args.server) as client:
            return _COMMANDS[args.command](client, args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except DataError as e:
        print(f"data error: {e}", file=sys.stderr)
        return EXIT_DATA
    except SystemExit:
        raise
    except KeyboardInterrupt:  # pragma: no cover
        return EXIT_INTERNAL
    except Exception as e:
        print(f"internal error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
