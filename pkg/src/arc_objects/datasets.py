"""Line-delimited JSON dataset interchange.

Files carry a header line {"format": "arc-objects/1", "k": 5} followed by one
record per line. Two record shapes share the container: trajectory records
(train.jsonl) and eval pairs (eval.jsonl). Serialization is canonical: fixed
key order, no whitespace, floats via repr, so reading a canonical file and
writing it back is byte-identical.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import IoError, SchemaError
from .grids import Grid, freeze, thaw

FORMAT = "arc-objects/1"
K = 5


@dataclass(frozen=True)
class StepRecord:
    state: Grid
    action: int
    rtg: float
    t: int
    pnp: tuple[tuple[int, ...], ...] | None = None


@dataclass(frozen=True)
class TrajectoryRecord:
    task: str
    instance: int
    steps: tuple[StepRecord, ...]
    mask: tuple[int, ...]


@dataclass(frozen=True)
class EvalPair:
    task: str
    instance: int
    input: Grid
    answer: Grid


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _step_to_json(step: StepRecord) -> dict:
    return {
        "state": thaw(step.state),
        "action": step.action,
        "rtg": step.rtg,
        "t": step.t,
        "pnp": None if step.pnp is None else [list(row) for row in step.pnp],
    }


def _record_to_json(rec: TrajectoryRecord) -> dict:
    return {
        "task": rec.task,
        "instance": rec.instance,
        "steps": [_step_to_json(s) for s in rec.steps],
        "mask": list(rec.mask),
    }


def _require(obj: dict, key: str, line: int):
    try:
        return obj[key]
    except (KeyError, TypeError):
        raise SchemaError(f"missing field {key!r}", line=line) from None


def _step_from_json(raw: dict, line: int) -> StepRecord:
    state = _require(raw, "state", line)
    action = _require(raw, "action", line)
    rtg = _require(raw, "rtg", line)
    t = _require(raw, "t", line)
    pnp = _require(raw, "pnp", line)
    try:
        state = freeze(state)
    except Exception as e:
        raise SchemaError(f"bad state: {e}", line=line) from None
    if type(action) is not int or not 0 <= action <= 13:
        raise SchemaError(f"action {action!r} is not an id in 0..13", line=line)
    if not isinstance(rtg, (int, float)) or isinstance(rtg, bool) or not 0.0 <= rtg <= 1.0:
        raise SchemaError(f"rtg {rtg!r} outside [0, 1]", line=line)
    if type(t) is not int or t < 1:
        raise SchemaError(f"t {t!r} is not a positive integer", line=line)
    if pnp is not None:
        if (
            not isinstance(pnp, list)
            or not all(isinstance(row, list) for row in pnp)
            or any(type(v) is not int or v < 0 for row in pnp for v in row)
        ):
            raise SchemaError("pnp map is not a matrix of ids >= 0", line=line)
        pnp = tuple(tuple(row) for row in pnp)
    return StepRecord(state, action, float(rtg), t, pnp)


def _record_from_json(raw: dict, line: int) -> TrajectoryRecord:
    task = _require(raw, "task", line)
    instance = _require(raw, "instance", line)
    steps_raw = _require(raw, "steps", line)
    mask = _require(raw, "mask", line)
    if not isinstance(task, str):
        raise SchemaError(f"task {task!r} is not a string", line=line)
    if type(instance) is not int:
        raise SchemaError(f"instance {instance!r} is not an int", line=line)
    if not isinstance(steps_raw, list) or not steps_raw:
        raise SchemaError("steps is not a non-empty list", line=line)
    if not isinstance(mask, list) or len(mask) != len(steps_raw) or any(
        m not in (0, 1) for m in mask
    ):
        raise SchemaError("mask must be a 0/1 list aligned with steps", line=line)
    steps = tuple(_step_from_json(s, line) for s in steps_raw)
    return TrajectoryRecord(task, instance, steps, tuple(mask))


def _read_lines(path) -> Iterator[tuple[int, dict]]:
    try:
        fh = open(path, "r", encoding="utf-8")
    except OSError as e:
        raise IoError(f"cannot open {path}: {e}") from None
    with fh:
        for number, text in enumerate(fh, start=1):
            text = text.strip()
            if not text:
                continue
            try:
                yield number, json.loads(text)
            except ValueError as e:
                raise SchemaError(f"invalid JSON: {e}", line=number) from None


def _check_header(raw: dict, line: int, expected_k: int = K):
    if raw.get("format") != FORMAT:
        raise SchemaError(f"unsupported format {raw.get('format')!r}", line=line)
    if raw.get("k") != expected_k:
        raise SchemaError(f"window size {raw.get('k')!r}, expected {expected_k}", line=line)


def read_dataset(path) -> Iterator[TrajectoryRecord]:
    """Stream trajectory records from a JSONL file, validating as it goes."""
    lines = _read_lines(path)
    try:
        number, header = next(lines)
    except StopIteration:
        return  # an empty file is an empty stream
    _check_header(header, number)
    for number, raw in lines:
        yield _record_from_json(raw, number)


def write_dataset(records: Iterable[TrajectoryRecord], path) -> int:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump({"format": FORMAT, "k": K}) + "\n")
            count = 0
            for rec in records:
                fh.write(_dump(_record_to_json(rec)) + "\n")
                count += 1
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from None
    return count


def read_eval_pairs(path) -> Iterator[EvalPair]:
    lines = _read_lines(path)
    try:
        number, header = next(lines)
    except StopIteration:
        return
    _check_header(header, number)
    for number, raw in lines:
        task = _require(raw, "task", number)
        instance = _require(raw, "instance", number)
        try:
            grid_in = freeze(_require(raw, "input", number))
            answer = freeze(_require(raw, "answer", number))
        except SchemaError:
            raise
        except Exception as e:
            raise SchemaError(f"bad grid: {e}", line=number) from None
        yield EvalPair(task, instance, grid_in, answer)


def write_eval_pairs(pairs: Iterable[EvalPair], path) -> int:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(_dump({"format": FORMAT, "k": K}) + "\n")
            count = 0
            for pair in pairs:
                fh.write(
                    _dump(
                        {
                            "task": pair.task,
                            "instance": pair.instance,
                            "input": thaw(pair.input),
                            "answer": thaw(pair.answer),
                        }
                    )
                    + "\n"
                )
                count += 1
    except OSError as e:
        raise IoError(f"cannot write {path}: {e}") from None
    return count
