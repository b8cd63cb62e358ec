"""Typed errors for the whole toolkit.

Every failure mode that callers are expected to handle has its own class so
that `except` clauses never have to string-match messages. The CLI maps these
onto exit codes: usage problems exit 1, data problems exit 2, everything
unexpected exits 3.
"""


class ArcObjectsError(Exception):
    """Base class for all toolkit errors."""


# ---- grid engine ----------------------------------------------------------

class GridShapeError(ArcObjectsError):
    """Grid is empty, ragged, or contains a value outside 0..9."""


class UnknownAction(ArcObjectsError):
    """Action id or name is not in the 14-action catalogue."""


class OutOfBounds(ArcObjectsError):
    """A selection or edit target lies outside the grid."""


class MoveCollision(ArcObjectsError):
    """A moved cell would land on a non-black cell that is not moving."""


class MoveOffGrid(ArcObjectsError):
    """A moved cell would leave the grid."""


class MissingArgument(ArcObjectsError):
    """Action arity violated: a required selection/color/source is missing,
    or an argument was supplied that the action does not take."""


class UnsupportedInput(ArcObjectsError):
    """Grid violates the structural assumptions of a task rule."""


# ---- trace parsing and dataset I/O ----------------------------------------

class MalformedJson(ArcObjectsError):
    """Outer document is not valid JSON."""


class DoubleEncodingError(ArcObjectsError):
    """The embedded action_sequence string is not itself valid JSON."""


class SchemaError(ArcObjectsError):
    """A required field is missing or has the wrong shape/range.

    Carries an optional 1-based line number for line-oriented files.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IoError(ArcObjectsError):
    """Filesystem problem while reading or writing."""


# ---- augmentation ----------------------------------------------------------

class LengthMismatch(ArcObjectsError):
    """Parallel sequences disagree in length."""


class LengthTooShort(ArcObjectsError):
    """A sequence is shorter than the operation requires."""


class GeneratorExhausted(ArcObjectsError):
    """Rejection sampling failed after a bounded number of attempts."""


class ReplayError(ArcObjectsError):
    """Replaying an expert trace failed at a specific step.

    Wraps the underlying grid-engine error and records the 1-based index of
    the failing step, plus the dataset instance index when replay happens
    inside a build.
    """

    def __init__(self, step: int, cause: Exception, instance: int | None = None):
        self.step = step
        self.cause = cause
        self.instance = instance
        prefix = f"step {step}" if instance is None else f"instance {instance}, step {step}"
        super().__init__(f"{prefix}: {cause}")


# ---- clustering ------------------------------------------------------------

class NotAdjacent(ArcObjectsError):
    """edge_distance asked about a cell pair that is not 8-adjacent."""


class InvalidDistance(ArcObjectsError):
    """repulsion asked about a distance outside {1, 2, 4, 5}."""


# ---- metrics ---------------------------------------------------------------

class NoObjects(ArcObjectsError):
    """Ground truth contains zero objects; recall is undefined."""


class SingleCluster(ArcObjectsError):
    """Fewer than two clusters; the silhouette score is undefined."""
