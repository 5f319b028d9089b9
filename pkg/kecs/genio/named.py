"""
Named fixture graphs.

Parameterized names use a colon, e.g. ``cycle:5``, ``kbip:2,3`` or
``theta:1,2,3``.
"""
from __future__ import annotations

from collections.abc import Callable

import networkx as nx

from kecs.coloring import EdgeColoring
from kecs.exceptions import UnknownGraphName
from kecs.genio import messages
from kecs.graph import EdgeSubgraph, MultiGraph

#: Edges of the two-triangle graph: triangles abc and def joined by cd,
#: with a..f = 0..5.
FIGURE1_EDGES: tuple[tuple[int, int], ...] = ((0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5))

#: A maximum 2-edge-colorable subgraph of the two-triangle graph with its
#: coloring (edge id → color): ab, cd, ef get 1 and bc, de get 2.
FIGURE1_A2: dict[int, int] = {0: 1, 1: 2, 3: 1, 4: 2, 5: 1}


def figure1() -> MultiGraph:
    return MultiGraph(6, FIGURE1_EDGES)


def figure1_a2(graph: MultiGraph | None = None) -> tuple[EdgeSubgraph, EdgeColoring]:
    """
    Returns the companion subgraph A_2 of :func:`figure1` and its
    2-coloring. Although A_2 is maximum, the path a-c-d-f is
    A_2-augmenting.
    """
    graph = graph or figure1()
    return EdgeSubgraph(graph, FIGURE1_A2), EdgeColoring(graph, 2, FIGURE1_A2)


def cycle(n: int) -> MultiGraph:
    return MultiGraph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> MultiGraph:
    """
    Path on `n` vertices (n − 1 edges).
    """
    return MultiGraph(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> MultiGraph:
    return MultiGraph(leaves + 1, [(0, leaf) for leaf in range(1, leaves + 1)])


def complete(n: int) -> MultiGraph:
    return MultiGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> MultiGraph:
    return MultiGraph(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def theta(*lengths: int) -> MultiGraph:
    """
    Two vertices 0 and 1 joined by internally disjoint paths with the
    given numbers of edges.
    """
    n = 2
    pairs = []
    for length in lengths:
        inner = list(range(n, n + length - 1))
        n += len(inner)
        walk = [0, *inner, 1]
        pairs.extend(zip(walk, walk[1:]))
    return MultiGraph(n, pairs)


def shannon(multiplicity: int) -> MultiGraph:
    """
    Triangle with every edge repeated `multiplicity` times; its
    chromatic index ⌊3Δ/2⌋ is the largest any multigraph can have.
    """
    return MultiGraph(3, [(u, v) for u, v in ((0, 1), (1, 2), (0, 2)) for _ in range(multiplicity)])


def _petersen() -> MultiGraph:
    return MultiGraph.from_networkx(nx.petersen_graph())


def _cube() -> MultiGraph:
    return MultiGraph.from_networkx(nx.hypercube_graph(3))


#: Fixed instances.
NAMED: dict[str, Callable[[], MultiGraph]] = {
    "figure1": figure1,
    "k33": lambda: complete_bipartite(3, 3),
    "k4": lambda: complete(4),
    "petersen": _petersen,
    "cube": _cube,
}

#: Parameterized families with the number of integer parameters.
FAMILIES: dict[str, tuple[Callable[..., MultiGraph], int]] = {
    "cycle": (cycle, 1),
    "path": (path, 1),
    "star": (star, 1),
    "complete": (complete, 1),
    "kbip": (complete_bipartite, 2),
    "theta": (theta, 3),
    "shannon": (shannon, 1),
}

#: Smallest accepted parameter per family.
MINIMUM: dict[str, int] = {"cycle": 2, "path": 1, "star": 0, "complete": 0, "kbip": 0, "theta": 1, "shannon": 1}


def _valid_names() -> list[str]:
    count = {1: "<n>", 2: "<a>,<b>", 3: "<a>,<b>,<c>"}
    return [*NAMED, *(f"{family}:{count[size]}" for family, (_, size) in FAMILIES.items())]


def gen_named(name: str) -> MultiGraph:
    """
    Builds a named graph.

    Parameters
    ----------
    name : str
        One of ``figure1``, ``k33``, ``k4``, ``petersen``, ``cube`` or a
        family with parameters: ``cycle:<n>``, ``path:<n>``,
        ``star:<n>``, ``complete:<n>``, ``kbip:<a>,<b>``,
        ``theta:<a>,<b>,<c>``, ``shannon:<μ>``

    Returns
    -------
    MultiGraph
        The instance

    Raises
    ------
    UnknownGraphName
        `name` is unknown or its parameters are malformed
    """
    key = name.strip().lower()
    if key in NAMED:
        return NAMED[key]()
    family, _, arguments = key.partition(":")
    if family not in FAMILIES:
        message = messages.UNKNOWN_NAME.format(name=name, valid=_valid_names())
        raise UnknownGraphName(message)
    build, size = FAMILIES[family]
    expected = f"{size} integer parameter(s) ≥ {MINIMUM[family]}"
    try:
        values = [int(value) for value in arguments.split(",")]
    except ValueError:
        values = []
    if len(values) != size or min(values) < MINIMUM[family]:
        message = messages.BAD_PARAMETER.format(name=name, expected=expected)
        raise UnknownGraphName(message)
    return build(*values)
