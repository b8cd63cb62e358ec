"""Push-and-pull object clustering.

Pipeline: abstract the grid into a graph (one node per non-black pixel at
triple its grid coordinates, one weighted edge per 8-adjacent pixel pair),
run a single simultaneous force pass that pulls same-color neighbors together
and pushes different-color neighbors apart, then cluster the displaced
positions with DBSCAN and write per-pixel labels back onto the grid.

Edge distances follow the fixed table

    same color,      direct adjacency -> 1
    same color,      diagonal         -> 2
    different color, direct adjacency -> 4
    different color, diagonal         -> 5

and each edge displaces both endpoints by (distance - 3) / 2 along the line
through them: negative pulls, positive pushes. With nodes 3.0 apart, pulled
direct pairs land at distance 1.0 and pushed direct pairs at 4.0; eps = 3.6
separates those regimes while still merging pulled diagonal pairs
(3*sqrt(2) - 1 ~ 3.24). min_pts = 1 means no point is noise: every pixel
must end up with an object id.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import InvalidDistance, NotAdjacent
from .grids import Color, Grid, dims

DEFAULT_EPS = 3.6
DEFAULT_MIN_PTS = 1

_SCALE = 3  # grid index -> position scale factor


@dataclass(frozen=True)
class PnPNode:
    id: int
    row: int
    col: int
    color: Color
    position: tuple[float, float]


@dataclass(frozen=True)
class PnPEdge:
    u: int
    v: int
    distance: int


@dataclass(frozen=True)
class PnPGraph:
    nodes: tuple[PnPNode, ...]
    edges: tuple[PnPEdge, ...]


def manhattan(a: tuple[int, int], b: tuple[int, int]) -> int:
    return abs(a[0] - b[0]) + abs(a[1] - b[1])


def edge_distance(color_u: Color, color_v: Color, adjacency: str) -> int:
    if adjacency not in ("direct", "diagonal"):
        raise NotAdjacent(f"adjacency {adjacency!r} is neither direct nor diagonal")
    if adjacency == "direct":
        return 1 if color_u == color_v else 4
    return 2 if color_u == color_v else 5


def abstract(grid: Grid) -> PnPGraph:
    """Function f: grid -> weighted proximity graph."""
    rows, cols = dims(grid)
    nodes = []
    index = {}
    for r in range(rows):
        for c in range(cols):
            if grid[r][c] != 0:
                index[(r, c)] = len(nodes)
                nodes.append(
                    PnPNode(len(nodes), r, c, grid[r][c], (float(_SCALE * r), float(_SCALE * c)))
                )
    edges = []
    for (r, c), u in index.items():
        # Scanning only the four forward directions yields each unordered
        # pair exactly once.
        for dr, dc in ((0, 1), (1, -1), (1, 0), (1, 1)):
            v = index.get((r + dr, c + dc))
            if v is None:
                continue
            adjacency = "direct" if dr == 0 or dc == 0 else "diagonal"
            dist = edge_distance(nodes[u].color, nodes[v].color, adjacency)
            a, b = (u, v) if u < v else (v, u)
            edges.append(PnPEdge(a, b, dist))
    edges.sort(key=lambda e: (e.u, e.v))
    return PnPGraph(tuple(nodes), tuple(edges))


def repulsion(distance: int) -> float:
    """(distance - 3) / 2: strictly negative pulls, strictly positive pushes."""
    if distance not in (1, 2, 4, 5):
        raise InvalidDistance(f"distance {distance!r} not in {{1, 2, 4, 5}}")
    return (distance - 3) / 2


def push_pull(graph: PnPGraph) -> PnPGraph:
    """Function g: one simultaneous force pass over all edges.

    Displacements accumulate per node from the *initial* positions and are
    applied once at the end, so the result does not depend on edge order.
    """
    disp = [(0.0, 0.0) for _ in graph.nodes]
    for edge in graph.edges:
        pu = graph.nodes[edge.u].position
        pv = graph.nodes[edge.v].position
        dx, dy = pv[0] - pu[0], pv[1] - pu[1]
        norm = math.hypot(dx, dy)
        ex, ey = dx / norm, dy / norm
        rho = repulsion(edge.distance)
        disp[edge.v] = (disp[edge.v][0] + rho * ex, disp[edge.v][1] + rho * ey)
        disp[edge.u] = (disp[edge.u][0] - rho * ex, disp[edge.u][1] - rho * ey)
    nodes = tuple(
        replace(n, position=(n.position[0] + d[0], n.position[1] + d[1]))
        for n, d in zip(graph.nodes, disp)
    )
    return PnPGraph(nodes, graph.edges)


def dbscan(points, eps: float, min_pts: int) -> list[int]:
    """Density-based clustering under Euclidean distance.

    Returns one label per point: 0..k-1 for clusters, -1 for noise. With
    min_pts = 1 every point is its own core, so no point stays noise and
    clusters are exactly the connected components of the eps-proximity graph.
    """
    points = [tuple(map(float, p)) for p in points]
    n = len(points)

    def neighbors(i):
        px, py = points[i]
        return [
            j
            for j in range(n)
            if math.hypot(points[j][0] - px, points[j][1] - py) <= eps
        ]

    UNVISITED, NOISE = -2, -1
    labels = [UNVISITED] * n
    cluster = -1
    for i in range(n):
        if labels[i] != UNVISITED:
            continue
        seed = neighbors(i)
        if len(seed) < min_pts:
            labels[i] = NOISE
            continue
        cluster += 1
        labels[i] = cluster
        queue = [j for j in seed if j != i]
        while queue:
            j = queue.pop()
            if labels[j] == NOISE:
                labels[j] = cluster  # border point adopted by the cluster
            if labels[j] != UNVISITED:
                continue
            labels[j] = cluster
            reach = neighbors(j)
            if len(reach) >= min_pts:
                queue.extend(k for k in reach if labels[k] == UNVISITED)
    return labels


@dataclass(frozen=True)
class PnPResult:
    before: PnPGraph
    after: PnPGraph
    labels: tuple[int, ...]  # canonical 1..k, aligned with the nodes
    map: tuple[tuple[int, ...], ...]


def analyze(
    grid: Grid, eps: float = DEFAULT_EPS, min_pts: int = DEFAULT_MIN_PTS
) -> PnPResult:
    """Full pipeline, keeping the intermediate graphs and per-node labels.

    Labels are canonical: 1..k in order of each cluster's minimal (row, col)
    member, so results are deterministic regardless of traversal internals.
    """
    before = abstract(grid)
    after = push_pull(before)
    raw = dbscan([n.position for n in after.nodes], eps, min_pts)
    first_cell: dict[int, tuple[int, int]] = {}
    for node, label in zip(after.nodes, raw):
        cell = (node.row, node.col)
        if label not in first_cell or cell < first_cell[label]:
            first_cell[label] = cell
    order = sorted(first_cell, key=first_cell.get)
    relabel = {old: new for new, old in enumerate(order, start=1)}
    labels = tuple(relabel[label] for label in raw)
    rows, cols = dims(grid)
    out = [[0] * cols for _ in range(rows)]
    for node, label in zip(after.nodes, labels):
        out[node.row][node.col] = label
    return PnPResult(before, after, labels, tuple(tuple(row) for row in out))


def cluster_map(
    grid: Grid, eps: float = DEFAULT_EPS, min_pts: int = DEFAULT_MIN_PTS
) -> list[list[int]]:
    """Per-pixel object ids, 0 for background."""
    return [list(row) for row in analyze(grid, eps, min_pts).map]
