"""The 14-action grid DSL and its deterministic application.

The catalogue covers every tool name that shows up in recorded human traces:
two delimiters (start/end), a submit marker, per-cell edit, copy-from-input,
four whole-grid geometry operations, four single-step moves, and selection
coloring. The id assignment is a documented constant; nothing downstream
depends on the particular numbers beyond stability.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GridShapeError,
    MissingArgument,
    MoveCollision,
    MoveOffGrid,
    OutOfBounds,
    UnknownAction,
)
from .grids import Cell, Color, Grid, dims, reflectx, reflecty, rotate_ccw, rotate_cw


@dataclass(frozen=True)
class ActionKind:
    id: int
    name: str
    needs_selection: bool = False
    needs_color: bool = False
    needs_source: bool = False


CATALOGUE: tuple[ActionKind, ...] = (
    ActionKind(0, "start"),
    ActionKind(1, "edit", needs_selection=True, needs_color=True),
    ActionKind(2, "copyFromInput", needs_source=True),
    ActionKind(3, "rotate_cw"),
    ActionKind(4, "rotate_ccw"),
    ActionKind(5, "reflectx"),
    ActionKind(6, "reflecty"),
    ActionKind(7, "move_up", needs_selection=True),
    ActionKind(8, "move_down", needs_selection=True),
    ActionKind(9, "move_left", needs_selection=True),
    ActionKind(10, "move_right", needs_selection=True),
    ActionKind(11, "coloring", needs_selection=True, needs_color=True),
    ActionKind(12, "submit"),
    ActionKind(13, "end"),
)

BY_ID = {a.id: a for a in CATALOGUE}
BY_NAME = {a.name: a for a in CATALOGUE}

# Recorded traces write the clockwise rotation as a bare "rotate".
ALIASES = {"rotate": "rotate_cw"}

# Delimiters frame a trace and never touch the grid; submit is a no-op marker.
DELIMITERS = ("start", "end", "submit")

_MOVE_DELTAS = {
    "move_up": (-1, 0),
    "move_down": (1, 0),
    "move_left": (0, -1),
    "move_right": (0, 1),
}


def resolve(action) -> ActionKind:
    """Look up an ActionKind by id, name, or alias.

    Raises UnknownAction for anything outside the catalogue.
    """
    if isinstance(action, ActionKind):
        return action
    if isinstance(action, int) and not isinstance(action, bool):
        try:
            return BY_ID[action]
        except KeyError:
            raise UnknownAction(f"no action with id {action}") from None
    if isinstance(action, str):
        name = ALIASES.get(action, action)
        try:
            return BY_NAME[name]
        except KeyError:
            raise UnknownAction(f"no action named {action!r}") from None
    raise UnknownAction(f"cannot resolve action from {action!r}")


def _check_selection(grid: Grid, selection) -> frozenset[Cell]:
    rows, cols = dims(grid)
    cells = frozenset(selection)
    for cell in cells:
        try:
            r, c = cell
        except (TypeError, ValueError):
            raise OutOfBounds(f"selection entry {cell!r} is not a (row, col) pair") from None
        if not (0 <= r < rows and 0 <= c < cols):
            raise OutOfBounds(f"selected cell {cell} outside {rows}x{cols} grid")
    return cells


def _move(grid: Grid, selection: frozenset[Cell], delta: tuple[int, int]) -> Grid:
    rows, cols = dims(grid)
    dr, dc = delta
    targets = {}
    for r, c in selection:
        nr, nc = r + dr, c + dc
        if not (0 <= nr < rows and 0 <= nc < cols):
            raise MoveOffGrid(f"cell ({r},{c}) would move to ({nr},{nc})")
        # Landing on a stationary colored cell would destroy it.
        if (nr, nc) not in selection and grid[nr][nc] != 0:
            raise MoveCollision(f"cell ({r},{c}) would land on colored cell ({nr},{nc})")
        targets[(nr, nc)] = grid[r][c]
    out = [list(row) for row in grid]
    for r, c in selection:
        out[r][c] = 0
    for (nr, nc), v in targets.items():
        out[nr][nc] = v
    return tuple(tuple(row) for row in out)


def apply_action(
    grid: Grid,
    action,
    selection=None,
    color: Color | None = None,
    source: Grid | None = None,
) -> Grid:
    """Apply one DSL action and return the resulting grid.

    The input grid is never modified. Arity is enforced strictly: a missing
    or surplus selection/color raises MissingArgument. `source` is consulted
    only by copyFromInput (the task's original input grid).
    """
    kind = resolve(action)

    if kind.needs_selection and selection is None:
        raise MissingArgument(f"{kind.name} requires a selection")
    if not kind.needs_selection and selection is not None:
        raise MissingArgument(f"{kind.name} does not take a selection")
    if kind.needs_color and color is None:
        raise MissingArgument(f"{kind.name} requires a color")
    if not kind.needs_color and color is not None:
        raise MissingArgument(f"{kind.name} does not take a color")
    if kind.needs_source and source is None:
        raise MissingArgument(f"{kind.name} requires the task input grid")

    if kind.needs_color and (type(color) is not int or not 0 <= color <= 9):
        raise GridShapeError(f"color {color!r} is not in 0..9")

    name = kind.name
    if name in DELIMITERS:
        return grid
    if name == "copyFromInput":
        return source
    if name == "rotate_cw":
        return rotate_cw(grid)
    if name == "rotate_ccw":
        return rotate_ccw(grid)
    if name == "reflectx":
        return reflectx(grid)
    if name == "reflecty":
        return reflecty(grid)

    cells = _check_selection(grid, selection)
    if name == "edit":
        if len(cells) != 1:
            raise MissingArgument(f"edit takes exactly one cell, got {len(cells)}")
        ((r, c),) = cells
        out = [list(row) for row in grid]
        out[r][c] = color
        return tuple(tuple(row) for row in out)
    if name == "coloring":
        out = [list(row) for row in grid]
        for r, c in cells:
            out[r][c] = color
        return tuple(tuple(row) for row in out)
    if name in _MOVE_DELTAS:
        return _move(grid, cells, _MOVE_DELTAS[name])

    raise UnknownAction(f"unhandled action {name!r}")  # pragma: no cover
