"""
Definition of the :class:`SolveResult` class and the solver :class:`Method`
enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from kecs.coloring import ColoringReport, EdgeColoring, verify_coloring
from kecs.exceptions import UnknownMethod
from kecs.graph import EdgeSubgraph, MultiGraph
from kecs.solver import messages


class Method(str, Enum):
    AUGMENTING = "augmenting"
    FLOW = "flow"
    ORACLE = "oracle"

    @property
    def bipartite_only(self) -> bool:
        return self is not Method.ORACLE

    @classmethod
    def parse(cls, name: str | Method) -> Method:
        """
        Resolves a method name; ``"augment"`` is accepted as the command
        line spelling of :attr:`AUGMENTING`.

        Raises
        ------
        UnknownMethod
            `name` does not name a method
        """
        if isinstance(name, Method):
            return name
        normalized = {"augment": cls.AUGMENTING.value}.get(name, name)
        try:
            return cls(normalized)
        except ValueError:
            valid = ["augment", *(method.value for method in cls)]
            message = messages.UNKNOWN_METHOD.format(method=name, valid=valid)
            raise UnknownMethod(message) from None


@dataclass
class SolveResult:
    """
    A maximum k-edge-colorable subgraph together with an explicit proper
    k-coloring of it.

    :attr:`verified` is only ``False`` when the exhaustive oracle ran out
    of budget, in which case :attr:`nu` is a lower bound.
    """

    graph: MultiGraph
    k: int
    subgraph: EdgeSubgraph
    coloring: EdgeColoring
    method: Method
    stats: dict[str, int] = field(default_factory=dict)
    verified: bool = True

    @property
    def nu(self) -> int:
        return len(self.subgraph)

    def check(self) -> ColoringReport:
        """
        Re-checks the certificate by definition: the coloring must be a
        total proper k-coloring of the subgraph (which also bounds its
        degrees by k).
        """
        return verify_coloring(self.subgraph, self.coloring, self.k)

    def __repr__(self) -> str:
        flag = "" if self.verified else ", unverified"
        return f"SolveResult(k={self.k}, nu={self.nu}, method={self.method.value}{flag})"
