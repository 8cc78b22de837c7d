# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from itertools import permutations

import networkx as nx
import pytest

from lapmult.canon import (
    MAX_CANON_ORDER,
    CanonicalForm,
    canonical_form,
    canonical_graph6,
    canonical_labeling,
    is_isomorphic,
)
from lapmult.enumeration import KNOWN_TOTALS, labeled_graphs
from lapmult.errors import LimitExceeded
from lapmult.families import complete_graph, cycle_graph, family, path_graph
from lapmult.graph import Graph
from lapmult.graph6 import from_graph6, to_graph6


def to_nx(g: Graph) -> nx.Graph:
    out = nx.Graph()
    out.add_nodes_from(range(g.order))
    out.add_edges_from(g.edges())
    return out


# ============================================================================
# Canonical form
# ============================================================================


class TestCanonicalForm:
    def test_labeling_is_a_permutation(self) -> None:
        perm = canonical_labeling(family("gnr", [3, 1]))
        assert sorted(perm) == list(range(6))

    def test_form_round_trips_through_graph(self) -> None:
        g = family("wheel", [6])
        form = canonical_form(g)
        assert canonical_form(form.to_graph()) == form
        assert form.to_graph() == g.relabel(canonical_labeling(g))
        assert form.to_graph6() == canonical_graph6(g) == to_graph6(form.to_graph())

    def test_complete_and_empty(self) -> None:
        assert canonical_graph6(complete_graph(4)) == "C~"
        assert canonical_graph6(Graph.empty(4)) == "C?"

    def test_single_vertex(self) -> None:
        assert canonical_form(Graph.empty(1)) == CanonicalForm(1, 0)

    def test_forms_order_by_encoding(self) -> None:
        low = canonical_form(Graph.empty(5))
        high = canonical_form(complete_graph(5))
        assert low < high

    def test_above_limit(self) -> None:
        with pytest.raises(LimitExceeded):
            canonical_form(Graph.empty(MAX_CANON_ORDER + 1))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, pytest.param(5, marks=pytest.mark.slow)])
    def test_invariant_under_every_permutation(self, n: int) -> None:
        for text in labeled_graphs(n):
            g = from_graph6(text)
            form = canonical_form(g)
            assert all(canonical_form(g.relabel(perm)) == form for perm in permutations(range(n)))

    def test_invariant_under_random_permutations(self, rng, random_graph) -> None:
        for n in range(5, MAX_CANON_ORDER + 1):
            for _ in range(15):
                g = random_graph(n, rng.random())
                perm = list(range(n))
                rng.shuffle(perm)
                assert canonical_form(g.relabel(perm)) == canonical_form(g)

    def test_regular_graphs(self) -> None:
        # vertex-transitive inputs exercise the individualization search
        petersen = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)] + [(5 + i, 5 + (i + 2) % 5) for i in range(5)])
        relabeled = petersen.relabel((3, 7, 1, 9, 0, 2, 8, 4, 6, 5))
        assert canonical_form(petersen) == canonical_form(relabeled)
        assert canonical_form(cycle_graph(10)) != canonical_form(petersen)


# ============================================================================
# Isomorphism
# ============================================================================


class TestIsomorphism:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_labeled_brute_force_class_count(self, n: int) -> None:
        assert len(labeled_graphs(n)) == KNOWN_TOTALS[n]

    def test_quick_rejections(self) -> None:
        assert not is_isomorphic(path_graph(4), path_graph(5))
        assert not is_isomorphic(path_graph(4), cycle_graph(4))
        assert not is_isomorphic(family("star", [4]), path_graph(4))

    def test_same_degrees_different_graphs(self) -> None:
        # C6 and two triangles are both 2-regular on six vertices
        two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_isomorphic(cycle_graph(6), two_triangles)

    def test_agrees_with_networkx(self, rng, random_graph) -> None:
        for _ in range(150):
            n = rng.randint(4, 8)
            p = rng.random()
            g, h = random_graph(n, p), random_graph(n, p)
            assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
