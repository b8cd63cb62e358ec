"""Expert-trace data augmentation: grids in, windowed trajectory records out.

For each training instance a fresh grid is generated from a per-instance seed
and one expert trace is chosen round-robin and replayed on it. The replayed
trajectory gets a progress scalar (rtg) partitioned evenly from 0 to 1, is
truncated to its last K steps or front-padded with copies of the first step
(mask 0), and becomes one TrajectoryRecord. Eval instances are (input grid,
rule-oracle answer) pairs.

Everything is a pure function of (task, experts, master seed): worker count
and run order never change the output.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

from .actions import resolve
from .datasets import K, EvalPair, StepRecord, TrajectoryRecord
from .errors import GeneratorExhausted, LengthTooShort, ReplayError, SchemaError
from .experts import ExpertTrace, generate_trace, is_expert_trace
from .grids import Grid
from .o2arc import Trace
from .pnp import DEFAULT_EPS, DEFAULT_MIN_PTS, cluster_map
from .tasks import TaskSpec, derive_seed, generate_random_grid, probe_grid, task_rule_oracle


def assign_rtg(length: int) -> list[float]:
    """Equal partition of [0, 1] over a trace: [0, 1/(L-1), ..., 1]."""
    if not isinstance(length, int) or length < 2:
        raise LengthTooShort(f"rtg needs length >= 2, got {length!r}")
    return [i / (length - 1) for i in range(length)]


def window_trace(trace: Trace, task: str, instance: int, k: int = K) -> TrajectoryRecord:
    """Cut a replayed trace into one K-step record.

    Steps carry (state after the action, action id, rtg, original 1-based
    timestep). Long traces keep their last k steps (the terminal segment
    contains the answer state); short ones are front-padded with copies of
    the first step, masked out.
    """
    rtg = assign_rtg(len(trace.steps))
    steps = [
        StepRecord(
            state=step.grid,
            action=resolve(step.action.tool).id,
            rtg=rtg[i],
            t=i + 1,
        )
        for i, step in enumerate(trace.steps)
    ]
    if len(steps) >= k:
        kept = steps[-k:]
        mask = [1] * k
    else:
        pad = k - len(steps)
        kept = [steps[0]] * pad + steps
        mask = [0] * pad + [1] * len(steps)
    return TrajectoryRecord(task, instance, tuple(kept), tuple(mask))


def _build_one(task: TaskSpec, experts: Sequence[ExpertTrace], master_seed: int, i: int):
    try:
        grid = generate_random_grid(task, derive_seed(master_seed, "train", i))
    except GeneratorExhausted as e:
        raise GeneratorExhausted(f"instance {i}: {e}") from e
    expert = experts[i % len(experts)]
    try:
        trace = generate_trace(grid, expert, trace_id=i, task_id=task.kind)
    except ReplayError as e:
        raise ReplayError(e.step, e.cause, instance=i) from e
    return window_trace(trace, task.kind, i)


def build_dataset(
    task: TaskSpec,
    experts: Sequence[ExpertTrace],
    n_train: int = 10000,
    n_eval: int = 2000,
    master_seed: int = 0,
    jobs: int = 1,
) -> tuple[list[TrajectoryRecord], list[EvalPair]]:
    """Generate the per-task training records and eval pairs."""
    if not experts:
        raise LengthTooShort("build_dataset needs at least one expert trace")
    probe = probe_grid(task)
    for index, expert in enumerate(experts):
        trace = generate_trace(probe, expert)
        ok = is_expert_trace(
            [s.action.tool for s in trace.steps],
            [s.grid for s in trace.steps],
            task.expert_threshold,
        )
        if not ok:
            raise SchemaError(f"expert trace {index} fails the expert filter on a probe grid")

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            train = list(
                pool.map(
                    lambda i: _build_one(task, experts, master_seed, i), range(n_train)
                )
            )
    else:
        train = [_build_one(task, experts, master_seed, i) for i in range(n_train)]

    pairs = []
    for j in range(n_eval):
        grid = generate_random_grid(task, derive_seed(master_seed, "eval", j))
        pairs.append(EvalPair(task.kind, j, grid, task_rule_oracle(task, grid)))
    return train, pairs


def attach_pnp(
    records: Iterable[TrajectoryRecord],
    eps: float = DEFAULT_EPS,
    min_pts: int = DEFAULT_MIN_PTS,
) -> list[TrajectoryRecord]:
    """Populate every step's pnp field with the clustering of its state.

    Padded steps are copies of the first real step, so their maps coincide
    with its map. Idempotent: already-annotated steps are recomputed to the
    same value. States repeat heavily within a record; a small memo avoids
    redundant clustering passes.
    """
    out = []
    for rec in records:
        memo: dict[Grid, tuple[tuple[int, ...], ...]] = {}
        steps = []
        for step in rec.steps:
            pnp = memo.get(step.state)
            if pnp is None:
                pnp = tuple(tuple(row) for row in cluster_map(step.state, eps, min_pts))
                memo[step.state] = pnp
            steps.append(StepRecord(step.state, step.action, step.rtg, step.t, pnp))
        out.append(TrajectoryRecord(rec.task, rec.instance, tuple(steps), rec.mask))
    return out
