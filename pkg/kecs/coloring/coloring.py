"""
Definition of the :class:`EdgeColoring` class and coloring verification.
"""
from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Union

from kecs.coloring import messages
from kecs.exceptions import ColoringConflict, EdgeRangeError
from kecs.graph import EdgeSubgraph, MultiGraph
from kecs.graph.messages import EDGE_RANGE


class EdgeColoring:
    """
    Partial proper edge coloring of a :class:`~kecs.graph.MultiGraph`
    with colors ``1..k``.

    Both directions are stored: edge → color, color → class (the edges
    colored with that color, a matching) and, per vertex, color → the
    incident edge with that color. A vertex *misses* a color when it has
    no incident edge of that color.
    """

    def __init__(self, graph: MultiGraph, k: int, assign: Mapping[int, int] | None = None):
        """
        Initialize a new `EdgeColoring` instance.

        Parameters
        ----------
        graph : MultiGraph
            Host graph
        k : int
            Number of available colors
        assign : Mapping[int, int], optional
            Initial edge id → color assignment

        Raises
        ------
        ColoringConflict
            `assign` is not proper or uses colors outside ``1..k``
        """
        self.graph = graph
        self.k = k
        self._assign: dict[int, int] = {}
        self._classes: dict[int, set[int]] = {color: set() for color in range(1, k + 1)}
        self._at: list[dict[int, int]] = [{} for _ in range(graph.n)]
        for edge_id, color in sorted((assign or {}).items()):
            self.set_color(edge_id, color)

    def color(self, edge_id: int) -> int | None:
        return self._assign.get(edge_id)

    @property
    def assign(self) -> dict[int, int]:
        return dict(self._assign)

    @property
    def classes(self) -> dict[int, frozenset[int]]:
        """
        Returns E_α for every color α in ``1..k``.
        """
        return {color: frozenset(members) for color, members in self._classes.items()}

    def edge_at(self, vertex: int, color: int) -> int | None:
        return self._at[vertex].get(color)

    def misses(self, vertex: int, color: int) -> bool:
        return color not in self._at[vertex]

    def missing_colors(self, vertex: int) -> list[int]:
        return [color for color in range(1, self.k + 1) if color not in self._at[vertex]]

    def free_color(self, u: int, v: int) -> int | None:
        """
        Returns the lowest color missing at both `u` and `v`, if any.
        """
        return next((c for c in range(1, self.k + 1) if c not in self._at[u] and c not in self._at[v]), None)

    def set_color(self, edge_id: int, color: int):
        """
        Colors (or recolors) an edge, keeping the coloring proper.

        Raises
        ------
        ColoringConflict
            `color` is outside ``1..k`` or already present at an endpoint
        """
        if not 0 <= edge_id < self.graph.m:
            message = EDGE_RANGE.format(edge_id=edge_id, m=self.graph.m)
            raise EdgeRangeError(message)
        if not 1 <= color <= self.k:
            message = messages.COLOR_RANGE.format(color=color, edge_id=edge_id, k=self.k)
            raise ColoringConflict(message)
        _, u, v = self.graph.edges[edge_id]
        for vertex in (u, v):
            other = self._at[vertex].get(color)
            if other is not None and other != edge_id:
                message = messages.CONFLICT.format(edge_id=edge_id, color=color, vertex=vertex, other=other)
                raise ColoringConflict(message)
        self.clear(edge_id)
        self._assign[edge_id] = color
        self._classes[color].add(edge_id)
        self._at[u][color] = edge_id
        self._at[v][color] = edge_id

    def clear(self, edge_id: int):
        color = self._assign.pop(edge_id, None)
        if color is None:
            return
        _, u, v = self.graph.edges[edge_id]
        self._classes[color].discard(edge_id)
        del self._at[u][color]
        del self._at[v][color]

    def recolor(self, changes: Mapping[int, int]):
        """
        Applies several color changes at once; intermediate states may
        be improper, only the final one is checked.
        """
        for edge_id in changes:
            self.clear(edge_id)
        for edge_id, color in changes.items():
            self.set_color(edge_id, color)

    def copy(self) -> EdgeColoring:
        return EdgeColoring(self.graph, self.k, self._assign)

    def is_total(self, subgraph: EdgeSubgraph) -> bool:
        return subgraph.members == set(self._assign)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._assign.items()))

    def __len__(self) -> int:
        return len(self._assign)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EdgeColoring):
            return NotImplemented
        return self.graph == other.graph and self.k == other.k and self._assign == other._assign

    def __repr__(self) -> str:
        return f"EdgeColoring(k={self.k}, {dict(self.items())})"


class ViolationKind(str, Enum):
    UNCOLORED = "uncolored"
    OUT_OF_RANGE = "out-of-range"
    CONFLICT = "conflict"
    FOREIGN = "foreign"


class Violation(NamedTuple):
    kind: ViolationKind
    vertex: int | None = None
    color: int | None = None
    edges: tuple[int, ...] = ()


@dataclass
class ColoringReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    @property
    def conflicts(self) -> list[tuple[int, int]]:
        """
        Returns the offending ``(vertex, color)`` pairs.
        """
        return [(v.vertex, v.color) for v in self.violations if v.kind is ViolationKind.CONFLICT]


Assignment = Union[EdgeColoring, Mapping[int, int]]


def verify_coloring(subgraph: EdgeSubgraph, coloring: Assignment, k: int) -> ColoringReport:
    """
    Checks by definition that `coloring` is a proper k-edge-coloring of
    all of `subgraph`.

    Parameters
    ----------
    subgraph : EdgeSubgraph
        Edges that must be colored
    coloring : EdgeColoring or Mapping[int, int]
        Coloring to check; a plain mapping is accepted so that untrusted
        data (e.g. a parsed certificate) can be checked too
    k : int
        Number of allowed colors

    Returns
    -------
    ColoringReport
        Empty (truthy) report iff the coloring is valid
    """
    assignment = coloring.assign if isinstance(coloring, EdgeColoring) else dict(coloring)
    host = subgraph.host
    report = ColoringReport()
    for edge_id in subgraph:
        if edge_id not in assignment:
            report.violations.append(Violation(ViolationKind.UNCOLORED, edges=(edge_id,)))
    seen: dict[tuple[int, int], list[int]] = {}
    for edge_id, color in sorted(assignment.items()):
        if edge_id not in subgraph:
            report.violations.append(Violation(ViolationKind.FOREIGN, color=color, edges=(edge_id,)))
            continue
        if not isinstance(color, int) or not 1 <= color <= k:
            report.violations.append(Violation(ViolationKind.OUT_OF_RANGE, color=color, edges=(edge_id,)))
            continue
        _, u, v = host.edges[edge_id]
        for vertex in (u, v):
            seen.setdefault((vertex, color), []).append(edge_id)
    for (vertex, color), edges in sorted(seen.items()):
        if len(edges) > 1:
            report.violations.append(Violation(ViolationKind.CONFLICT, vertex, color, tuple(edges)))
    return report


def color_classes_are_matchings(coloring: EdgeColoring) -> bool:
    for members in coloring.classes.values():
        covered: list[int] = []
        for edge_id in members:
            covered.extend(coloring.graph.pair(edge_id))
        if len(covered) != len(set(covered)):
            return False
    return True


