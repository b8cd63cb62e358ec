"""Reader/writer for the recorded human-trace JSON format.

The wild format is JSON-in-JSON: the outer object has an `action_sequence`
field that is a *string* containing another JSON document, whose own
`action_sequence` key holds the step list. Cell values and coordinates are
inconsistently encoded (`"2"` and `2` both occur, sometimes within one grid),
so everything numeric is normalized to int on the way in.

Parsing never depends on the action catalogue: a step whose tool name is not
a known action still parses (the name is preserved verbatim); converting such
a record to an ActionKind is what fails, with UnknownAction.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .actions import ActionKind, resolve
from .errors import (
    DoubleEncodingError,
    GridShapeError,
    MalformedJson,
    SchemaError,
)
from .grids import Grid, dims, freeze


@dataclass(frozen=True)
class SelectedCell:
    row: int
    col: int
    val: int
    selected: bool


@dataclass(frozen=True)
class ActionRecord:
    tool: str
    selected_cells: tuple[SelectedCell, ...] | None = None

    def to_action_kind(self) -> ActionKind:
        """Resolve against the catalogue; raises UnknownAction."""
        return resolve(self.tool)


@dataclass(frozen=True)
class TraceStep:
    action: ActionRecord
    grid: Grid
    submit: int = 0
    time: int = 0


@dataclass(frozen=True)
class Trace:
    id: int
    task_id: str
    user_id: str
    steps: tuple[TraceStep, ...] = field(default_factory=tuple)


def _as_int(value, what: str) -> int:
    if isinstance(value, bool):
        raise SchemaError(f"{what} is a boolean, expected an integer")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value, 10)
        except ValueError:
            pass
    raise SchemaError(f"{what} = {value!r} does not parse to an integer")


def _normalize_grid(raw, what: str) -> Grid:
    if not isinstance(raw, list) or not raw or not all(isinstance(r, list) for r in raw):
        raise GridShapeError(f"{what} is not a list of rows")
    coerced = [[_as_int(v, f"{what} cell") for v in row] for row in raw]
    return freeze(coerced)


def _parse_selected_cells(raw, grid: Grid) -> tuple[SelectedCell, ...]:
    if not isinstance(raw, list):
        raise SchemaError("selected_cells is not a list")
    rows, cols = dims(grid)
    out = []
    for entry in raw:
        if not isinstance(entry, dict):
            raise SchemaError(f"selected_cells entry {entry!r} is not an object")
        try:
            row = _as_int(entry["row"], "selected cell row")
            col = _as_int(entry["col"], "selected cell col")
            val = _as_int(entry["val"], "selected cell val")
            selected = entry["selected"]
        except KeyError as e:
            raise SchemaError(f"selected_cells entry missing {e.args[0]!r}") from None
        if not isinstance(selected, bool):
            raise SchemaError(f"selected flag {selected!r} is not a boolean")
        if not (0 <= row < rows and 0 <= col < cols):
            raise SchemaError(f"selected cell ({row},{col}) outside {rows}x{cols} grid")
        if not 0 <= val <= 9:
            raise SchemaError(f"selected cell val {val} is not a color in 0..9")
        out.append(SelectedCell(row, col, val, selected))
    return tuple(out)


def _parse_step(raw, index: int) -> TraceStep:
    if not isinstance(raw, dict):
        raise SchemaError(f"step {index} is not an object")
    try:
        action_raw = raw["action"]
        grid_raw = raw["grid"]
    except KeyError as e:
        raise SchemaError(f"step {index} missing {e.args[0]!r}") from None
    if not isinstance(action_raw, dict) or "tool" not in action_raw:
        raise SchemaError(f"step {index} action has no tool")
    tool = action_raw["tool"]
    if not isinstance(tool, str) or not tool:
        raise SchemaError(f"step {index} tool {tool!r} is not a non-empty string")

    grid = _normalize_grid(grid_raw, f"step {index} grid")

    cells = None
    if "selected_cells" in action_raw:
        cells = _parse_selected_cells(action_raw["selected_cells"], grid)

    submit = _as_int(raw.get("submit", 0), f"step {index} submit")
    if submit not in (0, 1):
        raise SchemaError(f"step {index} submit flag {submit} is not 0 or 1")
    time = _as_int(raw.get("time", 0), f"step {index} time")
    if time < 0:
        raise SchemaError(f"step {index} time {time} is negative")

    # Layer bookkeeping is validated for shape, then dropped from the model.
    if "currentLayer" in raw:
        _as_int(raw["currentLayer"], f"step {index} currentLayer")
    if "layer_list" in raw:
        layers = raw["layer_list"]
        if not isinstance(layers, list):
            raise SchemaError(f"step {index} layer_list is not a list")
        for layer in layers:
            _normalize_grid(layer, f"step {index} layer")

    return TraceStep(ActionRecord(tool, cells), grid, submit, time)


def parse_o2arc(document) -> Trace:
    """Parse one recorded trace document (bytes or str) into a Trace."""
    if isinstance(document, bytes):
        try:
            document = document.decode("utf-8")
        except UnicodeDecodeError as e:
            raise MalformedJson(f"document is not UTF-8: {e}") from None
    try:
        outer = json.loads(document)
    except ValueError as e:
        raise MalformedJson(str(e)) from None
    if not isinstance(outer, dict):
        raise SchemaError("outer document is not an object")

    try:
        trace_id = _as_int(outer["id"], "id")
        task_id = outer["task_id"]
        user_id = outer["user_id"]
        inner_text = outer["action_sequence"]
    except KeyError as e:
        raise SchemaError(f"missing {e.args[0]!r}") from None
    if not isinstance(task_id, str) or not isinstance(user_id, str):
        raise SchemaError("task_id/user_id must be strings")
    if not isinstance(inner_text, str):
        raise SchemaError("action_sequence must be a JSON-encoded string")

    try:
        inner = json.loads(inner_text)
    except ValueError as e:
        raise DoubleEncodingError(f"embedded action_sequence: {e}") from None
    if not isinstance(inner, dict) or "action_sequence" not in inner:
        raise SchemaError("embedded document has no action_sequence list")
    steps_raw = inner["action_sequence"]
    if not isinstance(steps_raw, list) or not steps_raw:
        raise SchemaError("action_sequence steps list is empty or not a list")

    steps = tuple(_parse_step(s, i) for i, s in enumerate(steps_raw))

    if steps[0].action.tool != "start":
        raise SchemaError(f"first step tool is {steps[0].action.tool!r}, expected 'start'")
    for i in range(1, len(steps)):
        if dims(steps[i].grid) != dims(steps[i - 1].grid):
            raise GridShapeError(
                f"step {i} grid {dims(steps[i].grid)} differs from step {i - 1} {dims(steps[i - 1].grid)}"
            )

    return Trace(trace_id, task_id, user_id, steps)


def serialize_trace(trace: Trace) -> bytes:
    """Emit the two-layer wild format; parse_o2arc(serialize_trace(t)) == t."""
    steps = []
    for step in trace.steps:
        action = {"tool": step.action.tool}
        if step.action.selected_cells is not None:
            action["selected_cells"] = [
                {"row": c.row, "col": c.col, "val": c.val, "selected": c.selected}
                for c in step.action.selected_cells
            ]
        steps.append(
            {
                "action": action,
                "grid": [list(row) for row in step.grid],
                "submit": step.submit,
                "time": step.time,
            }
        )
    inner = json.dumps({"action_sequence": steps}, separators=(",", ":"))
    outer = {
        "id": trace.id,
        "task_id": trace.task_id,
        "user_id": trace.user_id,
        "action_sequence": inner,
    }
    return json.dumps(outer, separators=(",", ":")).encode("utf-8")
