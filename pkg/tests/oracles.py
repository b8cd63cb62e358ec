"""Independent oracles the tests check the implementation against.

Everything here is deliberately written with different machinery than the
package uses: index arithmetic instead of zip tricks, union-find instead of
DFS, one-cell-per-step simulation instead of closed-form drops. When a test
asserts impl == oracle, the two sides must not share code. Frozen: changes
here require re-deriving the expected values by hand.
"""

from __future__ import annotations

import math


# ---- D4 operations via explicit index maps ----------------------------------

def transpose_oracle(grid):
    rows, cols = len(grid), len(grid[0])
    out = [[None] * rows for _ in range(cols)]
    for r in range(rows):
        for c in range(cols):
            out[c][r] = grid[r][c]
    return tuple(tuple(row) for row in out)


def rotate_cw_oracle(grid):
    rows, cols = len(grid), len(grid[0])
    out = [[None] * rows for _ in range(cols)]
    for r in range(rows):
        for c in range(cols):
            out[c][rows - 1 - r] = grid[r][c]
    return tuple(tuple(row) for row in out)


def rotate_ccw_oracle(grid):
    rows, cols = len(grid), len(grid[0])
    out = [[None] * rows for _ in range(cols)]
    for r in range(rows):
        for c in range(cols):
            out[cols - 1 - c][r] = grid[r][c]
    return tuple(tuple(row) for row in out)


def reflectx_oracle(grid):
    rows = len(grid)
    return tuple(tuple(grid[rows - 1 - r]) for r in range(rows))


def reflecty_oracle(grid):
    cols = len(grid[0])
    return tuple(tuple(row[cols - 1 - c] for c in range(cols)) for row in grid)


# ---- union-find --------------------------------------------------------------

class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def components_oracle(grid):
    """Same-color 8-connected components, ranked by minimal cell.

    Returns a list of (color, frozenset_of_cells) like the implementation,
    but built with union-find over all in-bounds neighbor pairs.
    """
    rows, cols = len(grid), len(grid[0])
    cells = [(r, c) for r in range(rows) for c in range(cols) if grid[r][c] != 0]
    uf = _UnionFind(cells)
    for r, c in cells:
        for dr in (-1, 0, 1):
            for dc in (-1, 0, 1):
                if dr == dc == 0:
                    continue
                nr, nc = r + dr, c + dc
                if 0 <= nr < rows and 0 <= nc < cols and grid[nr][nc] == grid[r][c]:
                    uf.union((r, c), (nr, nc))
    groups = {}
    for cell in cells:
        groups.setdefault(uf.find(cell), set()).add(cell)
    out = [(grid[min(g)[0]][min(g)[1]], frozenset(g)) for g in groups.values()]
    out.sort(key=lambda item: min(item[1]))
    return out


def eps_components_oracle(points, eps):
    """Connected components of the <=eps Euclidean proximity graph.

    The DBSCAN oracle for min_pts = 1: labels 0..k-1 in first-seen order.
    """
    n = len(points)
    uf = _UnionFind(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            d = math.hypot(points[i][0] - points[j][0], points[i][1] - points[j][1])
            if d <= eps:
                uf.union(i, j)
    labels = []
    order = {}
    for i in range(n):
        root = uf.find(i)
        if root not in order:
            order[root] = len(order)
        labels.append(order[root])
    return labels


# ---- one-cell-per-step task simulators ---------------------------------------

def simulate_tetris_oracle(grid):
    """Pieces fall one row per tick while every cell below them is free."""
    rows, cols = len(grid), len(grid[0])
    cells = [list(row) for row in grid]
    while True:
        pieces = components_oracle(tuple(tuple(r) for r in cells))
        fell = False
        # bottom-most piece first so a stacked pair settles bottom-up
        for color, piece in sorted(pieces, key=lambda p: -max(r for r, _ in p[1])):
            can_fall = all(
                r + 1 < rows and (cells[r + 1][c] == 0 or (r + 1, c) in piece)
                for r, c in piece
            )
            if can_fall:
                for r, c in sorted(piece, reverse=True):
                    cells[r + 1][c] = color
                    cells[r][c] = 0
                fell = True
        if not fell:
            return tuple(tuple(r) for r in cells)


def simulate_gravity_oracle(grid):
    """Side dots step one column toward the center line until blocked."""
    rows, cols = len(grid), len(grid[0])
    line_col = cols // 2
    cells = [list(row) for row in grid]
    moved = True
    while moved:
        moved = False
        for r in range(rows):
            for c in range(cols):
                if cells[r][c] == 0 or c == line_col:
                    continue
                step = 1 if c < line_col else -1
                if cells[r][c + step] == 0:
                    cells[r][c + step] = cells[r][c]
                    cells[r][c] = 0
                    moved = True
    return tuple(tuple(r) for r in cells)


def simulate_stretch_oracle(grid):
    """Shift rows up until the top row is occupied, then drip the lowest
    occupied row's cells downward one row per tick."""
    rows, cols = len(grid), len(grid[0])
    cells = [list(row) for row in grid]
    while not any(cells[0]):
        if not any(v for row in cells for v in row):
            raise ValueError("empty grid")
        cells = cells[1:] + [[0] * cols]
    bottom = max(r for r in range(rows) if any(cells[r]))
    for c in range(cols):
        if cells[bottom][c] != 0:
            r = bottom
            while r + 1 < rows:
                cells[r + 1][c] = cells[bottom][c]
                r += 1
    return tuple(tuple(r) for r in cells)


# ---- silhouette via full distance matrix -------------------------------------

def silhouette_oracle(points, labels):
    n = len(points)
    dist = [[math.hypot(points[i][0] - points[j][0], points[i][1] - points[j][1])
             for j in range(n)] for i in range(n)]
    clusters = {}
    for i, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(i)
    total = 0.0
    for i in range(n):
        own = clusters[labels[i]]
        if len(own) == 1:
            continue  # contributes 0
        a = sum(dist[i][j] for j in own if j != i) / (len(own) - 1)
        b = math.inf
        for lab, members in clusters.items():
            if lab == labels[i]:
                continue
            b = min(b, sum(dist[i][j] for j in members) / len(members))
        total += (b - a) / max(a, b)
    return total / n
