"""Hand-labeled clustering fixtures and the category evaluation over them.

A fixture directory holds one JSON file per category:

    {"category": "Same color, Direct adjacency",
     "fixtures": [{"name": ..., "grid": [[...]], "objects": [[[r, c], ...], ...],
                   "note": ...}, ...]}

`objects` is the human ground truth: disjoint pixel sets covering every
non-black cell. Evaluation runs the clustering pipeline on each grid, scores
exact-set recall against the labels, and takes the silhouette of the
*predicted* clustering over the post-force-pass node positions (grids where
the prediction is a single cluster contribute no silhouette, matching its
domain of definition).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import SchemaError, SingleCluster
from .grids import Grid, freeze
from .metrics import (
    CATEGORIES,
    CategoryRow,
    MetricReport,
    ObjectGroundTruth,
    matched_objects,
    silhouette,
)
from .pnp import DEFAULT_EPS, DEFAULT_MIN_PTS, analyze


@dataclass(frozen=True)
class Fixture:
    name: str
    category: str
    grid: Grid
    truth: ObjectGroundTruth


def _parse_fixture(raw: dict, category: str, where: str) -> Fixture:
    try:
        name = raw["name"]
        grid = freeze(raw["grid"])
        objects_raw = raw["objects"]
    except KeyError as e:
        raise SchemaError(f"{where}: fixture missing {e.args[0]!r}") from None
    objects = tuple(
        frozenset((int(r), int(c)) for r, c in obj) for obj in objects_raw
    )
    truth = ObjectGroundTruth(grid, objects)
    return Fixture(name, category, grid, truth)


def _parse_category_file(text: str, where: str) -> list[Fixture]:
    try:
        data = json.loads(text)
    except ValueError as e:
        raise SchemaError(f"{where}: not valid JSON: {e}") from None
    category = data.get("category")
    if category not in CATEGORIES:
        raise SchemaError(f"{where}: unknown category {category!r}")
    fixtures = data.get("fixtures")
    if not isinstance(fixtures, list) or not fixtures:
        raise SchemaError(f"{where}: fixtures must be a non-empty list")
    return [_parse_fixture(f, category, where) for f in fixtures]


def load_fixture_dir(path) -> list[Fixture]:
    files = sorted(Path(path).glob("*.json"))
    if not files:
        raise SchemaError(f"no fixture files in {path}")
    out: list[Fixture] = []
    for file in files:
        out.extend(_parse_category_file(file.read_text(encoding="utf-8"), file.name))
    return out


def bundled_fixtures() -> list[Fixture]:
    root = resources.files("arc_objects").joinpath("data/pnp_corpus")
    out: list[Fixture] = []
    for entry in sorted(root.iterdir(), key=lambda e: e.name):
        if entry.name.endswith(".json"):
            out.extend(_parse_category_file(entry.read_text(encoding="utf-8"), entry.name))
    return out


def evaluate_corpus(
    fixtures: list[Fixture],
    eps: float = DEFAULT_EPS,
    min_pts: int = DEFAULT_MIN_PTS,
) -> MetricReport:
    rows = {category: CategoryRow(category) for category in CATEGORIES}
    for fixture in fixtures:
        result = analyze(fixture.grid, eps, min_pts)
        predicted = [list(r) for r in result.map]
        row = rows[fixture.category]
        row.grids += 1
        row.objects_total += len(fixture.truth.objects)
        row.objects_correct += matched_objects(predicted, fixture.truth)
        try:
            score = silhouette(
                [n.position for n in result.after.nodes], list(result.labels)
            )
        except SingleCluster:
            continue
        row.silhouettes.append(score)
    return MetricReport([rows[c] for c in CATEGORIES if rows[c].grids])
