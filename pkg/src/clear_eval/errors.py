"""Exception hierarchy shared across the toolkit."""

from __future__ import annotations


class ClearError(Exception):
    """Base class for all toolkit errors."""


class InputValidationError(ClearError):
    """A corpus, annotation bundle, or config file violates its schema."""


class DegenerateInputError(ClearError):
    """Statistic undefined for this input (e.g. constant series)."""


class InsufficientDataError(ClearError):
    """Too few points to compute the requested statistic."""


class AlignmentError(ClearError):
    """Alignment links do not form a valid covering of both sentence lists."""


class JudgeError(ClearError):
    """Base class for judge-endpoint failures."""


class JudgeTransportError(JudgeError):
    """Network or HTTP failure talking to the judge endpoint, retries exhausted."""


class JudgeParseError(JudgeError):
    """Judge responded but no rating could be parsed, retries exhausted."""

    def __init__(self, message: str, raw_response: str = ""):
        super().__init__(message)
        self.raw_response = raw_response
