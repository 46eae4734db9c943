"""Exception types shared across the pipeline modules."""
from __future__ import annotations


class PipelineError(Exception):
    """Base class for every domain error raised by this package."""


class DimensionMismatchError(PipelineError):
    pass


class ChannelMismatchError(PipelineError):
    pass


class OutOfBoundsError(PipelineError):
    pass


class IndivisibleWidthError(PipelineError):
    pass


class EmptyMaskError(PipelineError):
    pass


class RectTooSmallError(PipelineError):
    pass


class ParamOutOfRangeError(PipelineError):
    pass


class PlanMismatchError(PipelineError):
    pass


class EmptyKeysError(PipelineError):
    pass


class MissingFieldError(PipelineError):
    pass


class EmptyInputError(PipelineError):
    pass


class NoClearFrameError(PipelineError):
    pass


class NoValidPairError(PipelineError):
    pass


class TooFewViewsError(PipelineError):
    pass


class TooSmallError(PipelineError):
    pass


class DegenerateFeaturesError(PipelineError):
    pass


class ManifestParseError(PipelineError):
    """Unparseable manifest line; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class TransportError(PipelineError):
    """Connection-level failure talking to a backend (unreachable, timeout)."""


class ProtocolError(PipelineError):
    """Backend answered with a non-2xx status."""

    def __init__(self, status: int, message: str = ""):
        super().__init__(f"backend returned {status}" + (f": {message}" if message else ""))
        self.status = status


class MalformedResponseError(PipelineError):
    """Backend answered 2xx but the body could not be decoded."""


class StageError(PipelineError):
    """Error from a pipeline stage, labeled with the stage name."""

    def __init__(self, stage: str, cause: Exception):
        super().__init__(f"{stage}: {cause}")
        self.stage = stage
        self.cause = cause
