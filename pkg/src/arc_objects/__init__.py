"""Grid-manipulation traces, trajectory datasets, and object clustering for ARC-style tasks.

The package splits into four layers:

* grid engine: ``grids``, ``actions`` (the fourteen-action edit vocabulary)
* traces: ``o2arc`` (recorded-session JSON), ``experts`` (replayable
  templates and the expertness filter)
* data: ``tasks`` (procedural generators and rule oracles), ``augment``
  and ``datasets`` (windowed trajectory JSONL), ``pipeline`` (manifests)
* objects: ``pnp`` (force-based clustering), ``metrics``, ``corpus``

``service`` wraps everything in an HTTP app; ``cli`` is a thin client.
"""

from .actions import BY_ID, BY_NAME, DELIMITERS, apply_action, resolve
from .augment import assign_rtg, attach_pnp, build_dataset, window_trace
from .corpus import Fixture, bundled_fixtures, evaluate_corpus, load_fixture_dir
from .datasets import (
    EvalPair,
    K,
    StepRecord,
    TrajectoryRecord,
    read_dataset,
    read_eval_pairs,
    write_dataset,
    write_eval_pairs,
)
from .errors import (
    ArcObjectsError,
    DoubleEncodingError,
    GeneratorExhausted,
    GridShapeError,
    InvalidDistance,
    IoError,
    LengthMismatch,
    LengthTooShort,
    MalformedJson,
    MissingArgument,
    MoveCollision,
    MoveOffGrid,
    NoObjects,
    NotAdjacent,
    OutOfBounds,
    ReplayError,
    SchemaError,
    SingleCluster,
    UnknownAction,
    UnsupportedInput,
)
from .experts import (
    ExpertStep,
    ExpertTrace,
    components,
    generate_trace,
    is_expert_trace,
    load_expert_file,
    parse_expert_traces,
)
from .grids import (
    Grid,
    dims,
    freeze,
    nonblack_cells,
    reflectx,
    reflecty,
    rotate_ccw,
    rotate_cw,
    thaw,
    transpose,
)
from .metrics import (
    CATEGORIES,
    MetricReport,
    ObjectGroundTruth,
    exact_match_accuracy,
    matched_objects,
    recall,
    silhouette,
)
from .o2arc import Trace, TraceStep, parse_o2arc, serialize_trace
from .pipeline import run_augment, run_cluster, run_evalpnp, run_inspect
from .pnp import DEFAULT_EPS, DEFAULT_MIN_PTS, PnPResult, abstract, analyze, cluster_map
from .tasks import (
    TaskSpec,
    derive_seed,
    generate_random_grid,
    probe_grid,
    task_rule_oracle,
    task_spec,
)

__version__ = "0.1.0"

__all__ = [
    "ArcObjectsError",
    "BY_ID",
    "BY_NAME",
    "CATEGORIES",
    "DEFAULT_EPS",
    "DEFAULT_MIN_PTS",
    "DELIMITERS",
    "DoubleEncodingError",
    "EvalPair",
    "ExpertStep",
    "ExpertTrace",
    "Fixture",
    "GeneratorExhausted",
    "Grid",
    "GridShapeError",
    "InvalidDistance",
    "IoError",
    "K",
    "LengthMismatch",
    "LengthTooShort",
    "MalformedJson",
    "MetricReport",
    "MissingArgument",
    "MoveCollision",
    "MoveOffGrid",
    "NoObjects",
    "NotAdjacent",
    "ObjectGroundTruth",
    "OutOfBounds",
    "PnPResult",
    "ReplayError",
    "SchemaError",
    "SingleCluster",
    "StepRecord",
    "TaskSpec",
    "Trace",
    "TraceStep",
    "TrajectoryRecord",
    "UnknownAction",
    "UnsupportedInput",
    "__version__",
    "abstract",
    "analyze",
    "apply_action",
    "assign_rtg",
    "attach_pnp",
    "build_dataset",
    "bundled_fixtures",
    "cluster_map",
    "components",
    "derive_seed",
    "dims",
    "evaluate_corpus",
    "exact_match_accuracy",
    "freeze",
    "generate_random_grid",
    "generate_trace",
    "is_expert_trace",
    "load_expert_file",
    "load_fixture_dir",
    "matched_objects",
    "nonblack_cells",
    "parse_expert_traces",
    "parse_o2arc",
    "probe_grid",
    "read_dataset",
    "read_eval_pairs",
    "recall",
    "reflectx",
    "reflecty",
    "resolve",
    "rotate_ccw",
    "rotate_cw",
    "run_augment",
    "run_cluster",
    "run_evalpnp",
    "run_inspect",
    "serialize_trace",
    "silhouette",
    "task_rule_oracle",
    "task_spec",
    "thaw",
    "transpose",
    "window_trace",
    "write_dataset",
    "write_eval_pairs",
]
