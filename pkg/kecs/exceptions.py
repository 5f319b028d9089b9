"""
Exception hierarchy for the :mod:`kecs` library.

Every error raised on purpose by the library derives from
:class:`KecsError`, so callers (most notably the command-line interface)
can tell input problems apart from programming errors.
"""
from __future__ import annotations

from collections.abc import Sequence


class KecsError(Exception):
    pass


# Graphs
class GraphError(KecsError):
    pass


class LoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class EdgeRangeError(GraphError):
    pass


class NotBipartiteError(GraphError):
    """
    Raised when a bipartite-only operation receives a graph with an odd
    cycle. The odd closed walk found by the 2-coloring is kept as
    :attr:`witness`.
    """

    def __init__(self, message: str, witness: Sequence[int] = ()):
        super().__init__(message)
        self.witness = tuple(witness)


class TransversalCapExceeded(GraphError):
    pass


# Colorings
class ColoringError(KecsError):
    pass


class DegreeExceedsK(ColoringError):
    pass


class ColoringConflict(ColoringError):
    pass


class StaleKempePath(ColoringError):
    pass


class KempeChainClosed(ColoringError):
    pass


# Solvers
class SolverError(KecsError):
    pass


class InvalidAugmentingPath(SolverError):
    pass


class UnknownMethod(SolverError):
    pass


class MethodDisagreement(SolverError):
    pass


class BudgetExhausted(SolverError):
    pass


# Checks
class CheckError(KecsError):
    pass


class SpectrumRangeError(CheckError):
    pass


class PreconditionError(CheckError):
    pass


class NotCubicError(PreconditionError):
    pass


class UnknownRule(CheckError):
    pass


# Input / output
class GenioError(KecsError):
    pass


class EdgeListParseError(GenioError):
    pass


class Graph6ParseError(GenioError):
    pass


class UnknownGraphName(GenioError):
    pass


class CertificateError(GenioError):
    pass


# Command line
class ConfigurationError(KecsError):
    pass


class ClaimFailed(KecsError):
    pass
