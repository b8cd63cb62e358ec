"""Clustering and task-accuracy metrics, plus the category report.

recall counts an object as detected only when some predicted cluster matches
its pixel set exactly; silhouette follows the standard convention (a = mean
intra-cluster distance, b = mean distance to the nearest other cluster,
s = (b - a) / max(a, b), singletons score 0). A clustering with fewer than
two clusters has no defined silhouette; that is an error, not a zero.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .errors import LengthMismatch, NoObjects, SchemaError, SingleCluster
from .grids import Grid

# The six evaluation categories, in report order.
CATEGORIES = (
    "Same color, Direct adjacency",
    "Same color, Diagonal adjacency",
    "Different color, Direct adjacency",
    "Different color, Diagonal adjacency",
    "Same color, Overlap",
    "Same color, With in specific range",
)


@dataclass(frozen=True)
class ObjectGroundTruth:
    grid: Grid
    objects: tuple[frozenset[tuple[int, int]], ...]

    def __post_init__(self):
        nonblack = {
            (r, c) for r, row in enumerate(self.grid) for c, v in enumerate(row) if v != 0
        }
        claimed: set[tuple[int, int]] = set()
        for obj in self.objects:
            if obj & claimed:
                raise SchemaError(f"overlapping ground-truth objects at {sorted(obj & claimed)}")
            claimed |= obj
        if claimed != nonblack:
            raise SchemaError(
                f"ground-truth objects cover {sorted(claimed)} but grid has {sorted(nonblack)}"
            )


def matched_objects(predicted: list[list[int]], truth: ObjectGroundTruth) -> int:
    """How many ground-truth objects some predicted cluster equals exactly."""
    clusters: dict[int, set[tuple[int, int]]] = {}
    for r, row in enumerate(predicted):
        for c, label in enumerate(row):
            if label != 0:
                clusters.setdefault(label, set()).add((r, c))
    predicted_sets = {frozenset(cells) for cells in clusters.values()}
    return sum(1 for obj in truth.objects if obj in predicted_sets)


def recall(predicted: list[list[int]], truth: ObjectGroundTruth) -> float:
    """Fraction of ground-truth objects whose pixel set some cluster equals."""
    if not truth.objects:
        raise NoObjects("ground truth has zero objects")
    return matched_objects(predicted, truth) / len(truth.objects)


def silhouette(points, labels) -> float:
    """Mean silhouette coefficient of a labeled point set."""
    points = [tuple(map(float, p)) for p in points]
    labels = list(labels)
    if len(points) != len(labels):
        raise LengthMismatch(f"{len(points)} points vs {len(labels)} labels")
    clusters: dict[object, list[int]] = {}
    for i, lab in enumerate(labels):
        clusters.setdefault(lab, []).append(i)
    if len(clusters) < 2:
        raise SingleCluster(f"{len(clusters)} cluster(s); silhouette undefined")

    def dist(i, j):
        return math.hypot(points[i][0] - points[j][0], points[i][1] - points[j][1])

    scores = []
    for i, lab in enumerate(labels):
        own = clusters[lab]
        if len(own) == 1:
            scores.append(0.0)
            continue
        a = sum(dist(i, j) for j in own if j != i) / (len(own) - 1)
        b = min(
            sum(dist(i, j) for j in members) / len(members)
            for other, members in clusters.items()
            if other != lab
        )
        scores.append((b - a) / max(a, b))
    return sum(scores) / len(scores)


def exact_match_accuracy(predictions: list[Grid], answers: list[Grid]) -> float:
    if len(predictions) != len(answers):
        raise LengthMismatch(f"{len(predictions)} predictions vs {len(answers)} answers")
    hits = sum(1 for p, a in zip(predictions, answers) if tuple(map(tuple, p)) == tuple(map(tuple, a)))
    return hits / len(predictions)


# ---- category report --------------------------------------------------------

@dataclass
class CategoryRow:
    category: str
    grids: int = 0
    objects_total: int = 0
    objects_correct: int = 0
    silhouettes: list[float] = field(default_factory=list)

    @property
    def recall(self) -> float | None:
        if self.objects_total == 0:
            return None
        return self.objects_correct / self.objects_total

    @property
    def silhouette(self) -> float | None:
        if not self.silhouettes:
            return None
        return sum(self.silhouettes) / len(self.silhouettes)


@dataclass
class MetricReport:
    rows: list[CategoryRow]

    def row(self, category: str) -> CategoryRow:
        for row in self.rows:
            if row.category == category:
                return row
        raise KeyError(category)

    @property
    def overall(self) -> CategoryRow:
        total = CategoryRow("Overall")
        for row in self.rows:
            total.grids += row.grids
            total.objects_total += row.objects_total
            total.objects_correct += row.objects_correct
            total.silhouettes.extend(row.silhouettes)
        return total

    def to_json(self) -> dict:
        def encode(row: CategoryRow) -> dict:
            return {
                "category": row.category,
                "grids": row.grids,
                "objects": row.objects_total,
                "correct": row.objects_correct,
                "recall": row.recall,
                "silhouette": row.silhouette,
            }

        return {"categories": [encode(r) for r in self.rows], "overall": encode(self.overall)}

    def to_text(self) -> str:
        def fmt(value: float | None) -> str:
            return "undefined" if value is None else f"{value:.2f}"

        rows = [*self.rows, self.overall]
        width = max(len(r.category) for r in rows)
        lines = [
            f"{'Category'.ljust(width)}  Grids  Objects  Recall  Silhouette",
        ]
        for r in rows:
            lines.append(
                f"{r.category.ljust(width)}  {r.grids:5d}  {r.objects_total:7d}"
                f"  {fmt(r.recall):>6}  {fmt(r.silhouette):>10}"
            )
        return "\n".join(lines)

    def to_json_text(self) -> str:
        return json.dumps(self.to_json(), indent=2)
