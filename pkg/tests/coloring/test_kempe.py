from unittest import TestCase

import pytest
from hypothesis import given
from hypothesis import strategies as st

from kecs.coloring import EdgeColoring, kempe_path, kempe_swap, konig_color, verify_coloring
from kecs.exceptions import ColoringError, KempeChainClosed, StaleKempePath
from kecs.graph import EdgeSubgraph, MultiGraph
from tests.coloring.test_konig import bipartite_multigraphs


class KempePathTestCase(TestCase):
    def setUp(self):
        self.path = MultiGraph(5, [(0, 1), (1, 2), (2, 3)])
        self.coloring = EdgeColoring(self.path, 3, {0: 1, 1: 2, 2: 1})

    def test_path_from_an_endpoint(self):
        chain = kempe_path(self.coloring, 0, 1, 2)
        self.assertEqual(chain.walk, (0, 1, 2))
        self.assertEqual(chain.endpoints, (0, 3))
        self.assertFalse(chain.is_cycle)

    def test_path_from_the_middle(self):
        chain = kempe_path(self.coloring, 2, 1, 2)
        self.assertEqual(set(chain.walk), {0, 1, 2})
        self.assertEqual(sorted(chain.endpoints), [0, 3])

    def test_empty_chain(self):
        chain = kempe_path(self.coloring, 4, 1, 2)
        self.assertTrue(chain.is_empty)
        self.assertEqual(chain.endpoints, (4, 4))

    def test_cycle(self):
        square = MultiGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        coloring = EdgeColoring(square, 2, {0: 1, 1: 2, 2: 1, 3: 2})
        chain = kempe_path(coloring, 0, 1, 2)
        self.assertTrue(chain.is_cycle)
        self.assertIsNone(chain.endpoints)
        self.assertEqual(len(chain), 4)

    def test_same_colors_raise(self):
        with self.assertRaises(ColoringError):
            kempe_path(self.coloring, 0, 2, 2)

    def test_swap(self):
        swapped = kempe_swap(self.coloring, kempe_path(self.coloring, 0, 1, 2))
        self.assertEqual(swapped.assign, {0: 2, 1: 1, 2: 2})
        self.assertEqual(self.coloring.assign, {0: 1, 1: 2, 2: 1})
        self.assertTrue(verify_coloring(EdgeSubgraph.whole(self.path), swapped, 3))

    def test_swap_frees_a_color(self):
        chain = kempe_path(self.coloring, 3, 3, 1)
        swapped = kempe_swap(self.coloring, chain)
        self.assertTrue(swapped.misses(3, 1))

    def test_stale_path_raises(self):
        chain = kempe_path(self.coloring, 0, 1, 2)
        self.coloring.clear(2)
        with self.assertRaises(StaleKempePath):
            kempe_swap(self.coloring, chain)

    def test_swapping_twice_restores_the_coloring(self):
        chain = kempe_path(self.coloring, 0, 1, 2)
        swapped = kempe_swap(self.coloring, chain)
        restored = kempe_swap(swapped, kempe_path(swapped, 0, 1, 2))
        self.assertEqual(restored.assign, self.coloring.assign)


@given(bipartite_multigraphs(), st.data())
def test_double_swap_is_the_identity(graph: MultiGraph, data: st.DataObject):
    whole = EdgeSubgraph.whole(graph)
    k = whole.max_degree + 2
    coloring = konig_color(whole, k)
    vertex = data.draw(st.integers(0, graph.n - 1))
    alpha, beta = data.draw(st.lists(st.integers(1, k), min_size=2, max_size=2, unique=True))
    swapped = kempe_swap(coloring, kempe_path(coloring, vertex, alpha, beta))
    assert verify_coloring(whole, swapped, k)
    restored = kempe_swap(swapped, kempe_path(swapped, vertex, alpha, beta))
    assert restored.assign == coloring.assign


def test_chain_closing_an_odd_cycle_raises(monkeypatch: pytest.MonkeyPatch):
    # With the bipartition check bypassed, the 2-1 chain from vertex 2 ends at 0.
    monkeypatch.setattr("kecs.coloring.konig.require_bipartition", lambda *args, **kwargs: None)
    triangle = MultiGraph(3, [(0, 1), (1, 2), (0, 2)])
    with pytest.raises(KempeChainClosed):
        konig_color(EdgeSubgraph.whole(triangle), 2)
