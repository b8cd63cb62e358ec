"""Expert traces: grid-relative action sequences and their replay.

A recorded human solution carries literal pixel selections, which are useless
on a freshly generated grid. Expert files therefore describe selections
relative to the grid's objects. Each trace is a JSON array whose entries are
either a bare tool name ("rotate") or an object:

    {"name": "move_down", "select": {"object": 1}}
    {"name": "move_right", "select": {"leftmost": true}}
    {"name": "move_up", "select": {"all": true}}
    {"name": "coloring", "select": {"below_content": true}, "color": {"content": true}}

Selectors:
    {"all": true}           every non-black cell of the current grid
    {"object": k}           k-th (1-based) same-color 8-connected component in
                            reading order of the *initial* grid; the component
                            is tracked positionally through later moves
    {"leftmost": true}      the initial-grid component whose leftmost column
                            is smallest (rightmost: largest)
    {"rightmost": true}
    {"below_content": true} all cells strictly below the lowest occupied row,
                            in the columns occupied on that row

Colors are either a literal int or {"content": true}, the single non-black
color present on the current grid.

Object indices are resolved once against the initial grid and then tracked by
translation, never re-ranked: re-ranking mid-trace would silently retarget a
selector as soon as one object moves past another in reading order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .actions import DELIMITERS, apply_action, resolve, _MOVE_DELTAS
from .errors import (
    ArcObjectsError,
    LengthMismatch,
    ReplayError,
    SchemaError,
)
from .grids import Cell, Grid, dims, nonblack_cells
from .o2arc import ActionRecord, SelectedCell, Trace, TraceStep

_NEIGHBORS8 = tuple(
    (dr, dc) for dr in (-1, 0, 1) for dc in (-1, 0, 1) if (dr, dc) != (0, 0)
)


@dataclass(frozen=True)
class ExpertStep:
    tool: str
    select: dict | None = None
    color: object | None = None


@dataclass(frozen=True)
class ExpertTrace:
    steps: tuple[ExpertStep, ...]

    @property
    def tools(self) -> tuple[str, ...]:
        return tuple(s.tool for s in self.steps)

    def effective_length(self) -> int:
        """Number of grid-affecting entries; delimiters are bookkeeping."""
        return sum(1 for s in self.steps if resolve(s.tool).name not in DELIMITERS)


def components(grid: Grid) -> list[tuple[int, frozenset[Cell]]]:
    """Same-color 8-connected components as (color, cells), reading order.

    Reading order means components are ranked by their minimal (row, col)
    cell. Uses iterative depth-first search.
    """
    rows, cols = dims(grid)
    seen: set[Cell] = set()
    out: list[tuple[int, frozenset[Cell]]] = []
    for r in range(rows):
        for c in range(cols):
            if grid[r][c] == 0 or (r, c) in seen:
                continue
            color = grid[r][c]
            stack = [(r, c)]
            seen.add((r, c))
            cells = []
            while stack:
                cr, cc = stack.pop()
                cells.append((cr, cc))
                for dr, dc in _NEIGHBORS8:
                    nr, nc = cr + dr, cc + dc
                    if (
                        0 <= nr < rows
                        and 0 <= nc < cols
                        and (nr, nc) not in seen
                        and grid[nr][nc] == color
                    ):
                        seen.add((nr, nc))
                        stack.append((nr, nc))
            out.append((color, frozenset(cells)))
    out.sort(key=lambda item: min(item[1]))
    return out


class _Registry:
    """Tracks the initial grid's components positionally through moves."""

    def __init__(self, grid: Grid):
        self.objects: list[set[Cell]] = [set(cells) for _, cells in components(grid)]

    def object_cells(self, index: int) -> frozenset[Cell]:
        if not 1 <= index <= len(self.objects):
            raise SchemaError(
                f"selector asks for object {index}, grid has {len(self.objects)}"
            )
        return frozenset(self.objects[index - 1])

    def extreme(self, side: str) -> frozenset[Cell]:
        if not self.objects:
            raise SchemaError(f"selector {side!r} on a grid with no objects")
        key = lambda cells: min(c for _, c in cells)
        pick = min if side == "leftmost" else max
        return frozenset(pick(self.objects, key=key))

    def shift(self, moved: frozenset[Cell], delta: tuple[int, int]) -> None:
        dr, dc = delta
        for obj in self.objects:
            hit = obj & moved
            for r, c in hit:
                obj.discard((r, c))
            for r, c in hit:
                obj.add((r + dr, c + dc))


def _below_content(grid: Grid) -> frozenset[Cell]:
    occupied = nonblack_cells(grid)
    if not occupied:
        raise SchemaError("below_content selector on an all-black grid")
    bottom = max(r for r, _ in occupied)
    cols = {c for r, c in occupied if r == bottom}
    rows, _ = dims(grid)
    return frozenset((r, c) for c in cols for r in range(bottom + 1, rows))


def _resolve_selector(sel: dict, grid: Grid, registry: _Registry) -> frozenset[Cell]:
    if not isinstance(sel, dict) or len(sel) != 1:
        raise SchemaError(f"bad selector {sel!r}")
    ((key, value),) = sel.items()
    if key == "all" and value is True:
        return nonblack_cells(grid)
    if key == "object":
        if type(value) is not int:
            raise SchemaError(f"object selector index {value!r} is not an int")
        return registry.object_cells(value)
    if key in ("leftmost", "rightmost") and value is True:
        return registry.extreme(key)
    if key == "below_content" and value is True:
        return _below_content(grid)
    raise SchemaError(f"bad selector {sel!r}")


def _resolve_color(spec, grid: Grid) -> int:
    if type(spec) is int:
        return spec
    if isinstance(spec, dict) and spec == {"content": True}:
        colors = {v for row in grid for v in row if v != 0}
        if len(colors) != 1:
            raise SchemaError(f"content color is ambiguous: {sorted(colors)}")
        return colors.pop()
    raise SchemaError(f"bad color spec {spec!r}")


def generate_trace(
    grid: Grid,
    expert: ExpertTrace,
    trace_id: int = 0,
    task_id: str = "synthetic",
    user_id: str = "expert",
) -> Trace:
    """Replay an expert trace on a grid, producing a full recorded-style Trace.

    Step i's grid equals the fold of the first i actions over the input; the
    first step ("start") carries the input grid itself. Any failure while
    resolving a selector or applying an action raises ReplayError with the
    1-based index of the failing step.
    """
    registry = _Registry(grid)
    current = grid
    steps: list[TraceStep] = []
    for index, estep in enumerate(expert.steps, start=1):
        try:
            kind = resolve(estep.tool)
            selection = None
            if estep.select is not None:
                selection = _resolve_selector(estep.select, current, registry)
            color = None
            if estep.color is not None:
                color = _resolve_color(estep.color, current)
            nxt = apply_action(current, kind, selection, color, source=grid)
            if kind.name in _MOVE_DELTAS:
                registry.shift(selection, _MOVE_DELTAS[kind.name])
        except ArcObjectsError as e:
            raise ReplayError(index, e) from e
        cells = None
        if selection is not None:
            cells = tuple(
                SelectedCell(r, c, current[r][c], True) for r, c in sorted(selection)
            )
        steps.append(
            TraceStep(
                action=ActionRecord(kind.name, cells),
                grid=nxt,
                submit=1 if index == len(expert.steps) else 0,
                time=0,
            )
        )
        current = nxt
    return Trace(trace_id, task_id, user_id, tuple(steps))


def is_expert_trace(actions, grids, threshold: int) -> bool:
    """The three-rule filter deciding whether a trace is expert quality.

    actions: tool names (aliases allowed), one per step.
    grids:   the grid after each step, aligned with actions.

    Rules: fewer than `threshold` grid-affecting actions; no per-cell edit
    action anywhere; no repeated grid state. The repeat check skips the
    grids recorded at end/submit markers (they duplicate the previous state
    by construction and say nothing about the solution path), while the
    start entry contributes the initial state.
    """
    actions = list(actions)
    grids = list(grids)
    if len(actions) != len(grids):
        raise LengthMismatch(f"{len(actions)} actions vs {len(grids)} grids")

    names = [resolve(a).name for a in actions]
    if "edit" in names:
        return False
    effective = sum(1 for n in names if n not in DELIMITERS)
    if effective >= threshold:
        return False
    seen = []
    for name, grid in zip(names, grids):
        if name in ("end", "submit"):
            continue
        if grid in seen:
            return False
        seen.append(grid)
    return True


def _parse_step(raw) -> ExpertStep:
    if isinstance(raw, str):
        return ExpertStep(raw)
    if isinstance(raw, dict):
        extra = set(raw) - {"name", "select", "color"}
        if "name" not in raw or extra:
            raise SchemaError(f"bad expert action {raw!r}")
        if not isinstance(raw["name"], str):
            raise SchemaError(f"expert action name {raw['name']!r} is not a string")
        return ExpertStep(raw["name"], raw.get("select"), raw.get("color"))
    raise SchemaError(f"expert action {raw!r} is neither a name nor an object")


def parse_expert_traces(text: str) -> list[ExpertTrace]:
    """Parse an expert file: a JSON list of action arrays."""
    try:
        data = json.loads(text)
    except ValueError as e:
        raise SchemaError(f"expert file is not valid JSON: {e}") from None
    if not isinstance(data, list) or not data:
        raise SchemaError("expert file must be a non-empty JSON list of traces")
    traces = []
    for i, raw_trace in enumerate(data):
        if not isinstance(raw_trace, list) or not raw_trace:
            raise SchemaError(f"trace {i} is not a non-empty list")
        steps = tuple(_parse_step(s) for s in raw_trace)
        for step in steps:
            resolve(step.tool)  # UnknownAction for names outside the catalogue
        traces.append(ExpertTrace(steps))
    return traces


def load_expert_file(path) -> list[ExpertTrace]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise SchemaError(f"cannot read expert file {path}: {e}") from None
    return parse_expert_traces(text)
