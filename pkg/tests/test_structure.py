# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
import math

import networkx as nx
import pytest

from lapmult.enumeration import all_graphs
from lapmult.errors import LimitExceeded
from lapmult.families import clique_union, complete_graph, cycle_graph, empty_graph, family, path_graph
from lapmult.graph import Graph, disjoint_union
from lapmult.structure import (
    complement_is_connected,
    components,
    connected_induced_subsets,
    contains_induced,
    diameter,
    is_cograph,
    is_connected,
)


# ============================================================================
# Connectivity
# ============================================================================


class TestComponents:
    def test_clique_plus_isolated(self) -> None:
        parts = components(disjoint_union(complete_graph(3), empty_graph(3)))
        assert parts.count == 4
        assert parts.blocks[0] == frozenset({0, 1, 2})

    def test_connected(self) -> None:
        assert is_connected(path_graph(5))
        assert not is_connected(clique_union(2, 2))
        assert is_connected(Graph.empty(1))

    def test_complement_connectivity(self) -> None:
        assert complement_is_connected(path_graph(4))
        assert not complement_is_connected(family("complete_bipartite", [2, 3]))

    def test_connected_induced_subsets(self) -> None:
        masks = list(connected_induced_subsets(path_graph(3)))
        assert sorted(masks) == [0b011, 0b110, 0b111]
        assert len(list(connected_induced_subsets(complete_graph(4), minimum=3))) == 5


# ============================================================================
# Diameter
# ============================================================================


class TestDiameter:
    @pytest.mark.parametrize(
        "graph, expected",
        [
            (path_graph(4), 3),
            (cycle_graph(5), 2),
            (complete_graph(5), 1),
            (Graph.empty(1), 0),
        ],
    )
    def test_examples(self, graph: Graph, expected: int) -> None:
        assert diameter(graph) == expected

    def test_complete_bipartite(self) -> None:
        assert diameter(family("complete_bipartite", [2, 4])) == 2

    def test_disconnected_is_infinite(self) -> None:
        assert diameter(clique_union(2, 2)) == math.inf

    def test_within_mask(self) -> None:
        assert diameter(cycle_graph(6), within=0b000111) == 2
        assert diameter(cycle_graph(6), within=0b000101) == math.inf


# ============================================================================
# Induced subgraphs and cographs
# ============================================================================


class TestInducedSubgraphs:
    def test_five_cycle_contains_path(self) -> None:
        assert contains_induced(cycle_graph(5), path_graph(4)) == frozenset({0, 1, 2, 3})

    def test_complete_has_no_five_cycle(self) -> None:
        assert contains_induced(complete_graph(6), cycle_graph(5)) is None

    def test_eq1_graph_is_p4_free(self) -> None:
        assert contains_induced(family("eq1_graph", [7]), path_graph(4)) is None

    def test_witness_is_really_induced(self) -> None:
        g = family("wheel", [7])
        witness = contains_induced(g, path_graph(4))
        assert witness is not None
        sub = g.induced(sorted(witness))
        assert sub.edge_count == 3 and sub.degree_sequence() == (2, 2, 1, 1)

    def test_pattern_larger_than_graph(self) -> None:
        assert contains_induced(path_graph(3), path_graph(4)) is None

    def test_pattern_limit(self) -> None:
        with pytest.raises(LimitExceeded):
            contains_induced(complete_graph(8), complete_graph(7))


class TestCograph:
    def test_examples(self) -> None:
        assert not is_cograph(path_graph(4))
        assert not is_cograph(cycle_graph(5))
        assert is_cograph(family("c4_join_complete", [6]))
        assert is_cograph(family("complete_multipartite", [2, 3, 1]))

    @pytest.mark.parametrize("n", [4, 5, 6])
    def test_matches_p4_freeness(self, n: int) -> None:
        p4 = path_graph(4)
        for g in all_graphs(n):
            assert is_cograph(g) == (contains_induced(g, p4) is None)

    def test_matches_networkx_components(self, random_graph) -> None:
        for n in (5, 8, 12):
            g = random_graph(n, 0.2)
            theirs = nx.Graph()
            theirs.add_nodes_from(range(n))
            theirs.add_edges_from(g.edges())
            expected = sorted(sorted(c) for c in nx.connected_components(theirs))
            assert sorted(sorted(block) for block in components(g).blocks) == expected
