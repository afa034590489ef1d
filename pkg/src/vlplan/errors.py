"""Exception types shared across the package."""


class VlplanError(Exception):
    """Base class for all package errors."""


class InvalidSpecError(VlplanError):
    """World generation spec has degenerate geometry."""


class OutOfRangeError(VlplanError):
    """Requested time lies outside the recorded log."""


class CapacityExceededError(VlplanError):
    """Scene produced more polyline rows than the configured maximum."""


class DegenerateRouteError(VlplanError):
    """No remaining route arc length to plan toward."""


class LengthMismatchError(VlplanError):
    """Trajectories of different pose counts cannot be compared."""


class ShapeMismatchError(VlplanError):
    """Input shapes do not match the scorer dimensions."""


class StaleCacheError(VlplanError):
    """Backward called with a cache from a different forward pass."""


class CorruptFileError(VlplanError):
    """Parameter file is truncated or has a bad header."""


class DimMismatchError(VlplanError):
    """Parameter file dims do not match the requested dims."""


class NoValidCandidateError(VlplanError):
    """Every candidate in the set is invalid; no validity gradient exists."""


class EmptyBatchesError(VlplanError):
    """Both mini-batches of a combined loss step are empty."""


class NonFiniteGradientError(VlplanError):
    """Gradient buffer contains NaN or infinity; step aborted."""


class InsufficientHistoryError(VlplanError):
    """Ego history does not cover the required stop window."""


class LogTooShortError(VlplanError):
    """Recorded log is shorter than one segmentation window."""


class ExpertFailedError(VlplanError):
    """Scripted expert could not produce a mistake-free log within retries."""


class SchemaMismatchError(VlplanError):
    """Dataset on disk uses an unknown schema version."""


class CountMismatchError(VlplanError):
    """Dataset manifest counts disagree with file contents."""


class MissingPrerequisiteError(VlplanError):
    """A required artifact (dataset, parameter file) does not exist."""


class TrainTestOverlapError(VlplanError):
    """A benchmark scenario comes from a log that was used for training."""


class ConfigError(VlplanError):
    """Experiment config is missing, malformed, or inconsistent."""
