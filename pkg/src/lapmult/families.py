# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum
from itertools import combinations
from typing import Callable, Sequence

from lapmult.errors import FamilyError
from lapmult.graph import Graph, disjoint_union, join, union_all

# Vertex order inside every constructor is fixed: clique vertices first, then independent
# sets, so edge-list fixtures stay stable.


class FamilyId(StrEnum):
    COMPLETE = "complete"
    EMPTY = "empty"
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    WHEEL = "wheel"
    COMPLETE_BIPARTITE = "complete_bipartite"
    COMPLETE_MULTIPARTITE = "complete_multipartite"
    COMPLETE_SPLIT = "complete_split"
    COMPLETE_MINUS_EDGE = "complete_minus_edge"
    COMPLETE_PLUS_PENDANT = "complete_plus_pendant"
    STAR_PLUS_EDGE = "star_plus_edge"
    BALANCED_BIPARTITE_PLUS_EDGE = "balanced_bipartite_plus_edge"
    EQ1_GRAPH = "eq1_graph"
    CONE_TWO_CLIQUES = "cone_two_cliques"
    CONE_BIPARTITE = "cone_bipartite"
    SPLIT_JOIN = "split_join"
    C4_JOIN_COMPLETE = "c4_join_complete"
    GNR = "gnr"
    J1 = "j1"
    J2 = "j2"
    J3 = "j3"


ALIASES = {
    "K_bipartite": FamilyId.COMPLETE_BIPARTITE,
    "K_multipartite": FamilyId.COMPLETE_MULTIPARTITE,
    "K": FamilyId.COMPLETE,
    "P": FamilyId.PATH,
    "C": FamilyId.CYCLE,
}


# Basic graphs ------------------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph.empty(n)


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((v, v + 1) for v in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)] + [(n - 1, 0)])


# Builders (validated) ----------------------------------------------------------------------------


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise FamilyError(message)


def _complete(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return complete_graph(n)


def _empty(n: int) -> Graph:
    _require(n >= 1, f"empty needs n >= 1, got {n}")
    return empty_graph(n)


def _path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return path_graph(n)


def _cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return cycle_graph(n)


def _star(n: int) -> Graph:
    _require(n >= 2, f"star needs n >= 2, got {n}")
    return join(complete_graph(1), empty_graph(n - 1)) if n > 1 else complete_graph(1)


def _wheel(n: int) -> Graph:
    _require(n >= 4, f"wheel needs n >= 4, got {n}")
    return join(complete_graph(1), cycle_graph(n - 1))


def _complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete_bipartite needs both parts >= 1, got ({a}, {b})")
    return join(empty_graph(a), empty_graph(b))


def _complete_multipartite(*parts: int) -> Graph:
    _require(len(parts) >= 1, "complete_multipartite needs at least one part")
    _require(all(p >= 1 for p in parts), f"complete_multipartite parts must be >= 1, got {parts}")
    result = empty_graph(parts[0])
    for p in parts[1:]:
        result = join(result, empty_graph(p))
    return result


def _complete_split(clique: int, independent: int) -> Graph:
    _require(clique >= 1 and independent >= 1, f"complete_split needs clique, independent >= 1, got ({clique}, {independent})")
    return join(complete_graph(clique), empty_graph(independent))


def _complete_minus_edge(n: int) -> Graph:
    _require(n >= 2, f"complete_minus_edge needs n >= 2, got {n}")
    return Graph.from_edges(n, (e for e in combinations(range(n), 2) if e != (n - 2, n - 1)))


def _complete_plus_pendant(n: int) -> Graph:
    # K_{n-1} on 0..n-2 plus vertex n-1 hanging off vertex 0
    _require(n >= 3, f"complete_plus_pendant needs n >= 3, got {n}")
    return complete_graph(n - 1).with_vertex(1)


def _star_plus_edge(n: int) -> Graph:
    # center 0, extra edge between leaves 1 and 2
    _require(n >= 3, f"star_plus_edge needs n >= 3, got {n}")
    return Graph.from_edges(n, [(0, v) for v in range(1, n)] + [(1, 2)])


def _balanced_bipartite_plus_edge(n: int) -> Graph:
    # parts {0..n/2-1} and {n/2..n-1}, extra edge inside the first part
    _require(n >= 4 and n % 2 == 0, f"balanced_bipartite_plus_edge needs even n >= 4, got {n}")
    half = n // 2
    return Graph.from_edges(n, [(u, v) for u in range(half) for v in range(half, n)] + [(0, 1)])


def _eq1_graph(n: int) -> Graph:
    # K_{n-3} joined with the complement of K_{1,2}
    _require(n >= 4, f"eq1_graph needs n >= 4, got {n}")
    return join(complete_graph(n - 3), disjoint_union(complete_graph(2), complete_graph(1)))


def _cone_two_cliques(n: int) -> Graph:
    _require(n >= 3 and n % 2 == 1, f"cone_two_cliques needs odd n >= 3, got {n}")
    half = (n - 1) // 2
    return join(complete_graph(1), disjoint_union(complete_graph(half), complete_graph(half)))


def _cone_bipartite(n: int) -> Graph:
    _require(n >= 3 and n % 2 == 1, f"cone_bipartite needs odd n >= 3, got {n}")
    half = (n - 1) // 2
    return join(complete_graph(1), join(empty_graph(half), empty_graph(half)))


def _split_join(n: int) -> Graph:
    # two cliques of size n/3 first, then the independent set of size n/3
    _require(n >= 3 and n % 3 == 0, f"split_join needs n >= 3 divisible by 3, got {n}")
    third = n // 3
    return join(disjoint_union(complete_graph(third), complete_graph(third)), empty_graph(third))


def _c4_join_complete(n: int) -> Graph:
    _require(n >= 5, f"c4_join_complete needs n >= 5, got {n}")
    return join(complete_graph(n - 4), cycle_graph(4))


def _gnr(n: int, r: int) -> Graph:
    """Two copies of K_r joined with (n-r)K_1 whose independent sets are completely joined.

    Order is 2n. Vertices run left to right: first clique, first independent set, second
    independent set, second clique.
    """
    _require(n >= 2, f"gnr needs n >= 2, got {n}")
    _require(1 <= r <= n - 1, f"gnr needs 1 <= r <= n-1, got r={r} for n={n}")
    s = n - r
    clique_a = range(0, r)
    indep_a = range(r, n)
    indep_b = range(n, n + s)
    clique_b = range(n + s, 2 * n)
    edges = list(combinations(clique_a, 2)) + list(combinations(clique_b, 2))
    edges += [(u, v) for u in clique_a for v in indep_a]
    edges += [(u, v) for u in indep_a for v in indep_b]
    edges += [(u, v) for u in indep_b for v in clique_b]
    return Graph.from_edges(2 * n, edges)


# forbidden induced subgraphs on v1, v2, v3, v4, u = 0, 1, 2, 3, 4


def _j1() -> Graph:
    return cycle_graph(5)


def _j2() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 4)])


def _j3() -> Graph:
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


# Registry ----------------------------------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    family: FamilyId
    arity: int | None  # None means one or more parameters
    constraints: str
    builder: Callable[..., Graph]


FAMILIES: dict[FamilyId, FamilySpec] = {
    spec.family: spec
    for spec in (
        FamilySpec(FamilyId.COMPLETE, 1, "n >= 1", _complete),
        FamilySpec(FamilyId.EMPTY, 1, "n >= 1", _empty),
        FamilySpec(FamilyId.PATH, 1, "n >= 1", _path),
        FamilySpec(FamilyId.CYCLE, 1, "n >= 3", _cycle),
        FamilySpec(FamilyId.STAR, 1, "n >= 2; center is vertex 0", _star),
        FamilySpec(FamilyId.WHEEL, 1, "n >= 4; hub is vertex 0", _wheel),
        FamilySpec(FamilyId.COMPLETE_BIPARTITE, 2, "a, b >= 1", _complete_bipartite),
        FamilySpec(FamilyId.COMPLETE_MULTIPARTITE, None, "every part >= 1", _complete_multipartite),
        FamilySpec(FamilyId.COMPLETE_SPLIT, 2, "clique, independent >= 1; K_clique joined with independent K_1", _complete_split),
        FamilySpec(FamilyId.COMPLETE_MINUS_EDGE, 1, "n >= 2; removed edge is (n-2, n-1)", _complete_minus_edge),
        FamilySpec(FamilyId.COMPLETE_PLUS_PENDANT, 1, "n >= 3; K_{n-1} plus a pendant at vertex 0", _complete_plus_pendant),
        FamilySpec(FamilyId.STAR_PLUS_EDGE, 1, "n >= 3; star plus leaf edge (1, 2)", _star_plus_edge),
        FamilySpec(FamilyId.BALANCED_BIPARTITE_PLUS_EDGE, 1, "n even, n >= 4; extra edge (0, 1) inside a part", _balanced_bipartite_plus_edge),
        FamilySpec(FamilyId.EQ1_GRAPH, 1, "n >= 4; K_{n-3} joined with K_2 + K_1", _eq1_graph),
        FamilySpec(FamilyId.CONE_TWO_CLIQUES, 1, "n odd, n >= 3; K_1 joined with 2K_{(n-1)/2}", _cone_two_cliques),
        FamilySpec(FamilyId.CONE_BIPARTITE, 1, "n odd, n >= 3; K_1 joined with K_{(n-1)/2,(n-1)/2}", _cone_bipartite),
        FamilySpec(FamilyId.SPLIT_JOIN, 1, "n divisible by 3; 2K_{n/3} joined with n/3 K_1", _split_join),
        FamilySpec(FamilyId.C4_JOIN_COMPLETE, 1, "n >= 5; K_{n-4} joined with C_4", _c4_join_complete),
        FamilySpec(FamilyId.GNR, 2, "n >= 2, 1 <= r <= n-1; order 2n", _gnr),
        FamilySpec(FamilyId.J1, 0, "5-cycle", _j1),
        FamilySpec(FamilyId.J2, 0, "5-cycle plus chord u-v2", _j2),
        FamilySpec(FamilyId.J3, 0, "path v1..v4 plus u adjacent to all", _j3),
    )
}


def resolve_family(name: str | FamilyId) -> FamilyId:
    if isinstance(name, FamilyId):
        return name
    if name in ALIASES:
        return ALIASES[name]
    try:
        return FamilyId(name)
    except ValueError:
        raise FamilyError(f"unknown family {name!r}") from None


def family(name: str | FamilyId, params: Sequence[int] = ()) -> Graph:
    spec = FAMILIES[resolve_family(name)]
    if spec.arity is not None and len(params) != spec.arity:
        raise FamilyError(f"{spec.family} takes {spec.arity} parameter(s), got {len(params)}")
    return spec.builder(*params)


def clique_union(count: int, size: int, isolated: int = 0) -> Graph:
    """aK_b united with cK_1."""
    parts = [complete_graph(size) for _ in range(count)] + [complete_graph(1) for _ in range(isolated)]
    return union_all(parts)
