"""
Seeded random multigraph generators.

Every generator takes a `seed` accepted by :func:`numpy.random.default_rng`
(an int, a :class:`~numpy.random.SeedSequence`, a generator or ``None``)
and draws all its randomness from that one generator, so equal seeds give
equal graphs.
"""
from __future__ import annotations

from typing import Union

import numpy as np

from kecs.exceptions import GenioError
from kecs.genio import messages
from kecs.graph import MultiGraph

Seed = Union[int, np.random.SeedSequence, np.random.Generator, None]


def _check_non_negative(**values: int):
    for name, value in values.items():
        if value < 0:
            message = messages.NEGATIVE_PARAMETER.format(name=name, value=value)
            raise GenioError(message)


def _check_probability(p: float):
    if not 0 <= p <= 1:
        message = messages.PROBABILITY.format(p=p)
        raise GenioError(message)


def _bipartite_pairs(rng: np.random.Generator, nu: int, nw: int, p: float, max_mult: int) -> list[tuple[int, int]]:
    present = rng.random((nu, nw)) < p
    multiplicity = rng.integers(1, max(max_mult, 1) + 1, size=(nu, nw))
    pairs = []
    for u, w in zip(*np.nonzero(present)):
        pairs.extend([(int(u), nu + int(w))] * int(multiplicity[u, w]))
    return pairs


def gen_regular_bipartite(half_n: int, k: int, seed: Seed = None) -> MultiGraph:
    """
    Returns a k-regular bipartite multigraph on 2·`half_n` vertices: the
    union of k uniformly random perfect matchings between ``0..half_n-1``
    and ``half_n..2·half_n-1``. Parallel edges are kept.

    Examples
    --------
    >>> gen_regular_bipartite(1, 4, seed=0).edge_pairs()
    [(0, 1), (0, 1), (0, 1), (0, 1)]
    """
    _check_non_negative(half_n=half_n, k=k)
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(k):
        permutation = rng.permutation(half_n)
        pairs.extend((u, half_n + int(w)) for u, w in enumerate(permutation))
    return MultiGraph(2 * half_n, pairs)


def gen_random_bipartite(nu: int, nw: int, p: float, max_mult: int = 1, seed: Seed = None) -> MultiGraph:
    """
    Returns a random bipartite multigraph with sides ``0..nu-1`` and
    ``nu..nu+nw-1``: every pair is joined with probability `p`, by
    1..`max_mult` parallel edges (uniformly).

    Parameters
    ----------
    nu, nw : int
        Side sizes
    p : float
        Edge probability in [0, 1]
    max_mult : int
        Largest multiplicity
    seed : Seed
        Randomness

    Returns
    -------
    MultiGraph
        Edges ordered by (u, w)
    """
    _check_non_negative(nu=nu, nw=nw, max_mult=max_mult)
    _check_probability(p)
    rng = np.random.default_rng(seed)
    return MultiGraph(nu + nw, _bipartite_pairs(rng, nu, nw, p, max_mult))


def gen_nearly_bipartite(
    nu: int,
    nw: int,
    p: float,
    apex_degree: int,
    max_mult: int = 1,
    seed: Seed = None,
) -> MultiGraph:
    """
    Returns a random bipartite multigraph (as :func:`gen_random_bipartite`)
    plus an apex vertex ``nu + nw`` joined to `apex_degree` distinct base
    vertices chosen uniformly. Removing the apex leaves a bipartite graph,
    so b(G) ≤ 1.
    """
    _check_non_negative(nu=nu, nw=nw, apex_degree=apex_degree, max_mult=max_mult)
    _check_probability(p)
    rng = np.random.default_rng(seed)
    pairs = _bipartite_pairs(rng, nu, nw, p, max_mult)
    base = nu + nw
    neighbors = rng.choice(base, size=min(apex_degree, base), replace=False) if base else []
    pairs.extend((int(vertex), base) for vertex in sorted(neighbors))
    return MultiGraph(base + 1, pairs)


def gen_random_multigraph(n: int, p: float, max_mult: int = 1, seed: Seed = None) -> MultiGraph:
    """
    Returns a random loopless multigraph: every pair u < v is joined with
    probability `p`, by 1..`max_mult` parallel edges.
    """
    _check_non_negative(n=n, max_mult=max_mult)
    _check_probability(p)
    rng = np.random.default_rng(seed)
    rows, cols = np.triu_indices(n, k=1)
    present = rng.random(rows.size) < p
    multiplicity = rng.integers(1, max(max_mult, 1) + 1, size=rows.size)
    pairs = []
    for index in np.flatnonzero(present):
        pairs.extend([(int(rows[index]), int(cols[index]))] * int(multiplicity[index]))
    return MultiGraph(n, pairs)
