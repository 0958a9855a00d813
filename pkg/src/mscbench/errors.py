"""Exception hierarchy shared across the pipeline.

The CLI maps these onto exit codes: usage errors exit 1, DataError 2,
TransportError 3.
"""

from __future__ import annotations


class MscbenchError(Exception):
    """Base class for all errors raised by this package."""


class DataError(MscbenchError):
    """Bad or missing input data: taxonomy files, fixtures, store contents."""


class MalformedCodeError(DataError, ValueError):
    """A string does not match the MSC 2020 code grammar."""


class TransportError(MscbenchError):
    """A network interaction failed after retries."""


class NoCachedTranscriptError(DataError):
    """Cache-only classification requested but no transcript is cached."""
