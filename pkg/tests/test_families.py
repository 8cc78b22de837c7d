# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
import pytest

from lapmult.canon import is_isomorphic
from lapmult.errors import FamilyError
from lapmult.families import (
    ALIASES,
    FAMILIES,
    FamilyId,
    clique_union,
    complete_graph,
    cycle_graph,
    family,
    path_graph,
    resolve_family,
)
from lapmult.graph import Graph


# ============================================================================
# Name resolution
# ============================================================================


class TestResolveFamily:
    def test_canonical_names(self) -> None:
        for fid in FamilyId:
            assert resolve_family(str(fid)) is fid

    def test_aliases(self) -> None:
        assert resolve_family("K_bipartite") is FamilyId.COMPLETE_BIPARTITE
        assert resolve_family("P") is FamilyId.PATH
        assert all(target in FAMILIES for target in ALIASES.values())

    def test_unknown(self) -> None:
        with pytest.raises(FamilyError, match="unknown family"):
            resolve_family("petersen")

    def test_every_family_is_registered(self) -> None:
        assert set(FAMILIES) == set(FamilyId)


# ============================================================================
# Parameter checking
# ============================================================================


class TestFamilyValidation:
    def test_wrong_arity(self) -> None:
        with pytest.raises(FamilyError, match="parameter"):
            family("complete_bipartite", [3])

    @pytest.mark.parametrize(
        "name, params",
        [
            ("cycle", [2]),
            ("wheel", [3]),
            ("balanced_bipartite_plus_edge", [5]),
            ("cone_two_cliques", [6]),
            ("split_join", [7]),
            ("gnr", [3, 3]),
            ("gnr", [3, 0]),
            ("complete_multipartite", [2, 0]),
        ],
    )
    def test_constraint_violations(self, name: str, params: list[int]) -> None:
        with pytest.raises(FamilyError):
            family(name, params)

    def test_family_error_is_value_error(self) -> None:
        with pytest.raises(ValueError):
            family("star", [1])


# ============================================================================
# Constructions
# ============================================================================


class TestFamilyConstruction:
    @pytest.mark.parametrize(
        "name, params, order, edges",
        [
            ("complete", [5], 5, 10),
            ("empty", [3], 3, 0),
            ("star", [5], 5, 4),
            ("wheel", [5], 5, 8),
            ("complete_bipartite", [2, 4], 6, 8),
            ("complete_multipartite", [2, 2, 2], 6, 12),
            ("complete_split", [2, 3], 5, 7),
            ("complete_minus_edge", [5], 5, 9),
            ("complete_plus_pendant", [5], 5, 7),
            ("star_plus_edge", [5], 5, 5),
            ("balanced_bipartite_plus_edge", [6], 6, 10),
            ("eq1_graph", [6], 6, 13),
            ("cone_two_cliques", [5], 5, 6),
            ("cone_bipartite", [5], 5, 8),
            ("split_join", [6], 6, 10),
            ("c4_join_complete", [6], 6, 13),
            ("gnr", [3, 1], 6, 8),
            ("gnr", [3, 2], 6, 7),
        ],
    )
    def test_order_and_size(self, name: str, params: list[int], order: int, edges: int) -> None:
        g = family(name, params)
        assert g.order == order
        assert g.edge_count == edges

    def test_star_center_is_vertex_zero(self) -> None:
        g = family("star", [5])
        assert g.degree(0) == 4

    def test_complete_minus_edge_removes_last_pair(self) -> None:
        g = family("complete_minus_edge", [5])
        assert not g.has_edge(3, 4)

    def test_pendant_hangs_off_vertex_zero(self) -> None:
        g = family("complete_plus_pendant", [5])
        assert g.neighbors(4) == [0]

    def test_star_plus_edge_leaf_edge(self) -> None:
        assert family("star_plus_edge", [4]).edges() == [(0, 1), (0, 2), (1, 2), (0, 3)]

    def test_gnr_smallest_is_path(self) -> None:
        assert family("gnr", [2, 1]) == path_graph(4)

    def test_gnr_layout(self) -> None:
        g = family("gnr", [3, 1])
        assert g.neighbors(0) == [1, 2]
        assert g.neighbors(5) == [3, 4]
        assert g.neighbors(1) == [0, 3, 4]

    def test_j1_is_five_cycle(self) -> None:
        assert family("j1") == cycle_graph(5)

    def test_j2_edges(self) -> None:
        assert sorted(family("j2").edges()) == [(0, 1), (0, 4), (1, 2), (1, 4), (2, 3), (3, 4)]

    def test_j3_is_fan(self) -> None:
        g = family("j3")
        assert g.degree(4) == 4
        assert g.induced([0, 1, 2, 3]) == path_graph(4)

    def test_cone_two_cliques_is_star_for_n3(self) -> None:
        assert is_isomorphic(family("cone_two_cliques", [3]), path_graph(3))

    def test_clique_union(self) -> None:
        g = clique_union(2, 3, 1)
        assert g.order == 7
        assert g.edge_count == 6
        assert g.degree(6) == 0

    def test_alias_builds_same_graph(self) -> None:
        assert family("K", [4]) == complete_graph(4)
        assert family("C", [6]) == cycle_graph(6)
        assert family("K_multipartite", [1, 3]) == family("star", [4])

    def test_every_family_has_constraints_text(self) -> None:
        for spec in FAMILIES.values():
            assert spec.constraints
            assert isinstance(spec.family, FamilyId)

    def test_zero_arity_families(self) -> None:
        for fid in (FamilyId.J1, FamilyId.J2, FamilyId.J3):
            assert isinstance(family(fid), Graph)
