# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from itertools import combinations
from typing import Iterator, Sequence, TypeVar

from json_logging import get_logger

from lapmult.canon import canonical_graph6
from lapmult.errors import LimitExceeded
from lapmult.graph import Graph
from lapmult.graph6 import from_graph6
from lapmult.structure import is_connected

logger = get_logger(__name__)

MAX_ENUM_ORDER = 9
MAX_LABELED_ORDER = 5

# unlabeled graph counts, all and connected
KNOWN_TOTALS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346, 9: 274668}
KNOWN_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117, 9: 261080}

T = TypeVar("T")


def check_order(n: int, limit: int = MAX_ENUM_ORDER) -> None:
    if not 1 <= n <= limit:
        raise LimitExceeded(f"enumeration supports 1 <= n <= {limit}, got {n}")


def augment(parents: Sequence[str]) -> set[str]:
    """Canonical graph6 of every one-vertex extension of the given canonical graph6 parents.

    Module level so it can be shipped to worker processes.
    """
    children: set[str] = set()
    for text in parents:
        parent = from_graph6(text)
        for neighbors in range(1 << parent.order):
            children.add(canonical_graph6(parent.with_vertex(neighbors)))
    return children


def chunked(items: Sequence[T], count: int) -> list[list[T]]:
    """Split into at most `count` contiguous chunks of near-equal size."""
    count = max(1, min(count, len(items)))
    size, extra = divmod(len(items), count)
    chunks, start = [], 0
    for i in range(count):
        end = start + size + (1 if i < extra else 0)
        chunks.append(list(items[start:end]))
        start = end
    return [chunk for chunk in chunks if chunk]


class GraphEnumerator:
    """Sorted canonical graph6 strings per order, grown one vertex at a time."""

    def __init__(self, levels: dict[int, tuple[str, ...]] | None = None) -> None:
        self.levels: dict[int, tuple[str, ...]] = dict(levels or {})
        self.levels.setdefault(1, ("@",))
        self.dirty: set[int] = set()

    def store(self, n: int, graph6s: set[str] | Sequence[str]) -> tuple[str, ...]:
        self.levels[n] = tuple(sorted(graph6s))
        self.dirty.add(n)
        logger.info(f"enumerated {len(self.levels[n])} graphs of order {n}")
        return self.levels[n]

    def missing(self, n: int) -> list[int]:
        return [order for order in range(2, n + 1) if order not in self.levels]

    def level(self, n: int) -> tuple[str, ...]:
        check_order(n)
        for order in self.missing(n):
            self.store(order, augment(self.levels[order - 1]))
        return self.levels[n]

    def all_graphs(self, n: int) -> Iterator[Graph]:
        return (from_graph6(text) for text in self.level(n))

    def connected_graphs(self, n: int) -> Iterator[Graph]:
        return (g for g in self.all_graphs(n) if is_connected(g))


DEFAULT_ENUMERATOR = GraphEnumerator()


def all_graphs(n: int) -> Iterator[Graph]:
    return DEFAULT_ENUMERATOR.all_graphs(n)


def connected_graphs(n: int) -> Iterator[Graph]:
    return DEFAULT_ENUMERATOR.connected_graphs(n)


def labeled_graphs(n: int) -> tuple[str, ...]:
    """Brute force over all 2^C(n,2) labeled graphs, reduced to sorted canonical graph6."""
    check_order(n, MAX_LABELED_ORDER)
    pairs = list(combinations(range(n), 2))
    seen: set[str] = set()
    for mask in range(1 << len(pairs)):
        edges = [pair for bit, pair in enumerate(pairs) if mask >> bit & 1]
        seen.add(canonical_graph6(Graph.from_edges(n, edges)))
    return tuple(sorted(seen))
