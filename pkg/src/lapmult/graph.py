# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    """Labeled simple undirected graph on vertices 0..order-1.

    Each entry of `rows` is the neighbor bitset of one vertex, so edge queries are a
    single shift and neighborhood operations are word-parallel.
    """

    order: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.order < 1:
            raise ValueError(f"graph order must be >= 1, got {self.order}")
        if len(self.rows) != self.order:
            raise ValueError(f"expected {self.order} neighbor rows, got {len(self.rows)}")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbor outside 0..{self.order - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at ({v}, {u})")

    # Construction --------------------------------------------------------------------------------

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) outside 0..{order - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(order, tuple(rows))

    def with_vertex(self, neighbors: int) -> Graph:
        """Return a copy with one new vertex (index `order`) adjacent to the bitset `neighbors`."""
        rows = list(self.rows)
        for u in iter_bits(neighbors):
            rows[u] |= 1 << self.order
        rows.append(neighbors)
        return Graph(self.order + 1, tuple(rows))

    # Queries -------------------------------------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees(), reverse=True))

    @property
    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.order) for u in iter_bits(self.rows[v] & ((1 << v) - 1))]

    @property
    def vertex_mask(self) -> int:
        return (1 << self.order) - 1

    # Derived graphs ------------------------------------------------------------------------------

    def induced(self, vertices: Sequence[int]) -> Graph:
        """Subgraph induced on `vertices`; vertex vertices[i] becomes i."""
        position = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for u in iter_bits(self.rows[v]):
                if u in position:
                    row |= 1 << position[u]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex v renamed to perm[v]."""
        rows = [0] * self.order
        for v in range(self.order):
            row = 0
            for u in iter_bits(self.rows[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.order, tuple(rows))

    def __str__(self) -> str:
        return f"Graph(n={self.order}, m={self.edge_count})"


def complement(g: Graph) -> Graph:
    full = g.vertex_mask
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shift = g.order
    return Graph(g.order + h.order, g.rows + tuple(row << shift for row in h.rows))


def join(g: Graph, h: Graph) -> Graph:
    shift = g.order
    low = g.vertex_mask
    high = h.vertex_mask << shift
    rows = tuple(row | high for row in g.rows) + tuple(row << shift | low for row in h.rows)
    return Graph(g.order + h.order, rows)


def union_all(graphs: Iterable[Graph]) -> Graph:
    result: Graph | None = None
    for g in graphs:
        result = g if result is None else disjoint_union(result, g)
    if result is None:
        raise ValueError("union of no graphs")
    return result
