"""
Definition of the :class:`NuSpectrum` class: the sequence ν_0, ν_1, ...
of a graph.
"""
from __future__ import annotations

import logging
from collections.abc import Sequence
from dataclasses import dataclass, field

from kecs.exceptions import SpectrumRangeError, UnknownMethod
from kecs.graph import MultiGraph, is_bipartite
from kecs.graph.multigraph import Fingerprint
from kecs.solver import Method, SolveResult, solve
from kecs.spectrum import messages

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NuSpectrum:
    """
    ν_0..ν_K of a graph with the method that produced every entry.

    Once an entry reaches m, every later value is m as well, so
    :meth:`at` answers for any k beyond :attr:`top` in that case.
    """

    values: tuple[int, ...]
    methods: tuple[Method, ...]
    fingerprint: Fingerprint
    bipartite: bool
    #: ``False`` when some oracle entry is only a lower bound.
    verified: bool = True
    results: tuple[SolveResult, ...] = field(default=(), compare=False, repr=False)

    @classmethod
    def from_values(
        cls,
        values: Sequence[int],
        bipartite: bool = True,
        fingerprint: Fingerprint | None = None,
        method: Method = Method.ORACLE,
    ) -> NuSpectrum:
        """
        Wraps a bare sequence of values, e.g. one read back from a report.
        Without a fingerprint, m is taken to be the last value.
        """
        values = tuple(int(value) for value in values)
        if fingerprint is None:
            fingerprint = (0, values[-1] if values else 0, ())
        return cls(values, (method,) * len(values), fingerprint, bipartite)

    @property
    def top(self) -> int:
        return len(self.values) - 1

    @property
    def m(self) -> int:
        return self.fingerprint[1]

    @property
    def complete(self) -> bool:
        """
        Whether the last entry equals m, i.e. the whole graph is
        K-edge-colorable.
        """
        return bool(self.values) and self.values[-1] == self.m

    @property
    def differences(self) -> tuple[int, ...]:
        return tuple(b - a for a, b in zip(self.values, self.values[1:]))

    def at(self, k: int) -> int:
        """
        Returns ν_k.

        Raises
        ------
        SpectrumRangeError
            `k` is negative or lies beyond an incomplete spectrum
        """
        if 0 <= k <= self.top:
            return self.values[k]
        if k > self.top and self.complete:
            return self.m
        message = messages.SPECTRUM_RANGE.format(index=k, top=self.top)
        raise SpectrumRangeError(message)

    def __len__(self) -> int:
        return len(self.values)


def _resolve(method: str | Method, bipartite: bool) -> Method:
    if method == "auto":
        return Method.FLOW if bipartite else Method.ORACLE
    try:
        return Method.parse(method)
    except UnknownMethod:
        message = messages.SPECTRUM_METHOD.format(valid=["augment", *(m.value for m in Method)], method=method)
        raise UnknownMethod(message) from None


def spectrum(
    graph: MultiGraph,
    method: str | Method = "auto",
    cap: int | None = None,
    budget: int | None = None,
) -> NuSpectrum:
    """
    Computes ν_k for k = 0, 1, ... .

    Bipartite graphs stop at K = Δ, where ν_Δ = m. Otherwise k grows
    until ν_k = m, which happens by ⌊3Δ/2⌋ at the latest.

    Parameters
    ----------
    graph : MultiGraph
        Input graph
    method : str or Method
        Solver for every entry; ``"auto"`` (default) picks ``flow`` for
        bipartite graphs and ``oracle`` otherwise
    cap : int, optional
        Largest k to compute
    budget : int, optional
        Oracle node budget per entry

    Returns
    -------
    NuSpectrum
        The spectrum; unverified when an oracle run was cut short

    Raises
    ------
    NotBipartiteError
        A bipartite-only `method` got a non-bipartite graph
    """
    bipartite = is_bipartite(graph)
    chosen = _resolve(method, bipartite)
    last = graph.max_degree if bipartite else 3 * graph.max_degree // 2
    if cap is not None:
        last = min(last, cap)
    results: list[SolveResult] = []
    for k in range(last + 1):
        result = solve(graph, k, chosen, budget)
        results.append(result)
        if result.nu == graph.m:
            break
    values = tuple(result.nu for result in results)
    verified = all(result.verified for result in results)
    log.debug("Spectrum of %r by %s: %s", graph, chosen.value, list(values))
    return NuSpectrum(
        values,
        tuple(result.method for result in results),
        graph.fingerprint,
        bipartite,
        verified,
        tuple(results),
    )
