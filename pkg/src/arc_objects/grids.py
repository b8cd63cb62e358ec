"""Immutable color grids and the whole-grid geometry operations.

A grid is a tuple of row tuples of ints in 0..9 where 0 is the black
background. Tuples keep values hashable and safe to share across threads;
everything that needs JSON talks through `freeze`/`thaw`.
"""

from __future__ import annotations

from .errors import GridShapeError

Color = int
Cell = tuple[int, int]
Grid = tuple[tuple[int, ...], ...]


def freeze(cells) -> Grid:
    """Validate a matrix-like value and return it as an immutable Grid.

    Raises GridShapeError for empty input, ragged rows, or any entry that is
    not an int in 0..9 (bools are rejected too).
    """
    try:
        rows = [list(r) for r in cells]
    except TypeError:
        raise GridShapeError(f"not a matrix: {cells!r}") from None
    if not rows or not rows[0]:
        raise GridShapeError("grid must have at least one row and one column")
    width = len(rows[0])
    for r, row in enumerate(rows):
        if len(row) != width:
            raise GridShapeError(f"ragged grid: row {r} has {len(row)} cells, expected {width}")
        for c, v in enumerate(row):
            if type(v) is not int or not 0 <= v <= 9:
                raise GridShapeError(f"cell ({r},{c}) = {v!r} is not a color in 0..9")
    return tuple(tuple(row) for row in rows)


def thaw(grid: Grid) -> list[list[int]]:
    return [list(row) for row in grid]


def dims(grid: Grid) -> tuple[int, int]:
    return len(grid), len(grid[0])


def rotate_cw(grid: Grid) -> Grid:
    """Clockwise quarter turn: out[i][j] = in[rows-1-j][i]."""
    rows, cols = dims(grid)
    return tuple(tuple(grid[rows - 1 - j][i] for j in range(rows)) for i in range(cols))


def rotate_ccw(grid: Grid) -> Grid:
    """Counterclockwise quarter turn: out[i][j] = in[j][cols-1-i]."""
    rows, cols = dims(grid)
    return tuple(tuple(grid[j][cols - 1 - i] for j in range(rows)) for i in range(cols))


def reflectx(grid: Grid) -> Grid:
    """Up-down flip (mirror across the horizontal axis)."""
    return tuple(reversed(grid))


def reflecty(grid: Grid) -> Grid:
    """Left-right flip (mirror across the vertical axis)."""
    return tuple(tuple(reversed(row)) for row in grid)


def transpose(grid: Grid) -> Grid:
    return tuple(zip(*grid))


def nonblack_cells(grid: Grid) -> frozenset[Cell]:
    return frozenset(
        (r, c) for r, row in enumerate(grid) for c, v in enumerate(row) if v != 0
    )
