"""Command implementations shared by the HTTP service and the CLI.

Each run_* function is a plain, deterministic function from resolved
parameters to serializable results; the service exposes them over HTTP and
the CLI calls them through its client. Dataset builds write train.jsonl,
eval.jsonl, and manifest.json into the output directory and return the
manifest. The manifest carries the resolved configuration, its hash, and
content hashes of the expert input and the emitted files, so a rerun can be
checked for byte-identity and downstream consumers can verify provenance.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources
from pathlib import Path

from .augment import attach_pnp, build_dataset
from .corpus import bundled_fixtures, evaluate_corpus, load_fixture_dir
from .datasets import FORMAT, K, read_dataset, write_dataset, write_eval_pairs
from .errors import IoError, SchemaError
from .experts import parse_expert_traces
from .grids import freeze
from .pnp import DEFAULT_EPS, DEFAULT_MIN_PTS, analyze
from .actions import BY_ID
from .tasks import task_spec


def _sha256(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def bundled_expert_text(kind: str) -> str:
    ref = resources.files("arc_objects").joinpath(f"data/experts/{kind}.json")
    try:
        return ref.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise SchemaError(f"no bundled expert traces for task {kind!r}") from None


def run_augment(
    task: str,
    seed: int = 0,
    train: int = 10000,
    eval: int = 2000,
    out: str = ".",
    experts: str | None = None,
    eps: float = DEFAULT_EPS,
    min_pts: int = DEFAULT_MIN_PTS,
    pnp: bool = False,
    jobs: int = 1,
) -> dict:
    spec = task_spec(task)
    if experts is None:
        expert_text = bundled_expert_text(task)
        expert_source = f"bundled:{task}"
    else:
        try:
            expert_text = Path(experts).read_text(encoding="utf-8")
        except OSError as e:
            raise IoError(f"cannot read expert file {experts}: {e}") from None
        expert_source = str(experts)
    expert_traces = parse_expert_traces(expert_text)

    records, pairs = build_dataset(
        spec, expert_traces, n_train=train, n_eval=eval, master_seed=seed, jobs=jobs
    )
    if pnp:
        records = attach_pnp(records, eps, min_pts)

    out_dir = Path(out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise IoError(f"cannot create output directory {out_dir}: {e}") from None

    train_path = out_dir / "train.jsonl"
    eval_path = out_dir / "eval.jsonl"
    n_train_written = write_dataset(records, train_path)
    n_eval_written = write_eval_pairs(pairs, eval_path)

    config = {
        "task": task,
        "seed": seed,
        "train": train,
        "eval": eval,
        "experts": expert_source,
        "eps": eps,
        "min_pts": min_pts,
        "pnp": pnp,
    }
    manifest = {
        "format": FORMAT,
        "k": K,
        "task": task,
        "seed": seed,
        "counts": {"train": n_train_written, "eval": n_eval_written},
        "config": config,
        "config_hash": _sha256(json.dumps(config, sort_keys=True).encode()),
        "inputs": {"experts_source": expert_source, "experts_sha256": _sha256(expert_text.encode())},
        "files": {
            "train.jsonl": {
                "records": n_train_written,
                "sha256": _sha256(train_path.read_bytes()),
            },
            "eval.jsonl": {
                "records": n_eval_written,
                "sha256": _sha256(eval_path.read_bytes()),
            },
        },
    }
    (out_dir / "manifest.json").write_text(
        json.dumps(manifest, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )
    return manifest


def run_cluster(
    grid_cells,
    eps: float = DEFAULT_EPS,
    min_pts: int = DEFAULT_MIN_PTS,
    debug: bool = False,
) -> dict:
    grid = freeze(grid_cells)
    result = analyze(grid, eps, min_pts)
    payload: dict = {"map": [list(row) for row in result.map]}
    if debug:
        def nodes(graph):
            return [
                {
                    "id": n.id,
                    "row": n.row,
                    "col": n.col,
                    "color": n.color,
                    "position": [n.position[0], n.position[1]],
                }
                for n in graph.nodes
            ]

        payload["debug"] = {
            "nodes_before": nodes(result.before),
            "nodes_after": nodes(result.after),
            "labels": list(result.labels),
        }
    return payload


def run_evalpnp(
    fixtures: str | None = None,
    eps: float = DEFAULT_EPS,
    min_pts: int = DEFAULT_MIN_PTS,
) -> tuple[dict, str]:
    loaded = bundled_fixtures() if fixtures is None else load_fixture_dir(fixtures)
    report = evaluate_corpus(loaded, eps, min_pts)
    return report.to_json(), report.to_text()


def run_inspect(path: str, index: int = 0) -> str:
    record = None
    for i, rec in enumerate(read_dataset(path)):
        if i == index:
            record = rec
            break
    if record is None:
        raise SchemaError(f"dataset {path} has no record {index}")

    def render(grid) -> str:
        return "/".join("".join(str(v) for v in row) for row in grid)

    lines = [
        f"record {index}  task={record.task}  instance={record.instance}",
        f"{'step':>4}  {'t':>2}  mask  {'action':<12}  {'rtg':>6}  state"
        + ("  pnp" if any(s.pnp is not None for s in record.steps) else ""),
    ]
    for i, (step, mask) in enumerate(zip(record.steps, record.mask)):
        row = (
            f"{i:>4}  {step.t:>2}  {mask:>4}  {BY_ID[step.action].name:<12}"
            f"  {step.rtg:>6.3f}  {render(step.state)}"
        )
        if step.pnp is not None:
            row += f"  {render(step.pnp)}"
        lines.append(row)
    return "\n".join(lines)
