"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ClawTraceError(Exception):
    """Base class for all package errors."""


class GraphError(ClawTraceError, ValueError):
    pass


class IndexOutOfRange(GraphError):
    pass


class LoopEdge(GraphError):
    pass


class MalformedGraph6(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


class BadParameter(ClawTraceError, ValueError):
    pass


class GiveUp(ClawTraceError, RuntimeError):
    pass


class TooLarge(ClawTraceError, ValueError):
    pass


class PatternTooLarge(TooLarge):
    pass


class InvalidEmbedding(ClawTraceError, ValueError):
    pass


class NotConnected(ClawTraceError, ValueError):
    pass


class DuplicateVertex(ClawTraceError, ValueError):
    pass


class PreconditionViolated(ClawTraceError, ValueError):
    pass


class InternalStuck(ClawTraceError, RuntimeError):
    """No lifting transformation applied to a valid relaxed path.

    This must never fire; seeing it means a bug in the lifting loop.
    """


class BadConfig(ClawTraceError, ValueError):
    pass
