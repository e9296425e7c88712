"""Exception types shared by every module.

Each failure mode gets its own class so callers (and the CLI exit-code
mapping) can tell them apart without string matching.
"""

from __future__ import annotations


class CutPolytopeError(Exception):
    """Base class for all library errors."""


class GraphError(CutPolytopeError):
    """Invalid graph input. ``line`` is the 1-based source line, if any."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class Malformed(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class LimitExceeded(CutPolytopeError):
    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices, cap is {cap}")
        self.n = n
        self.cap = cap


class EqualCuts(CutPolytopeError):
    pass


class NotAdjacent(CutPolytopeError):
    pass


class ActuallyAdjacent(CutPolytopeError):
    pass


class NotSubgraph(CutPolytopeError):
    pass


class WrongClass(CutPolytopeError):
    pass


class PartTooSmall(CutPolytopeError):
    pass


class BadSpec(CutPolytopeError):
    pass


class SizeMismatch(CutPolytopeError):
    pass


class UnknownIndex(CutPolytopeError):
    pass


class DisconnectedSkeleton(CutPolytopeError):
    pass


class InvalidSkeleton(CutPolytopeError):
    pass
