# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from lapmult.canon import canonical_form
from lapmult.errors import LimitExceeded
from lapmult.graph import Graph, complement, iter_bits

MAX_PATTERN_ORDER = 6


@dataclass(frozen=True, slots=True)
class ComponentPartition:
    blocks: tuple[frozenset[int], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def _reach(g: Graph, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.rows[v]
        frontier = grown & within & ~seen
        seen |= frontier
    return seen


def _component_masks(g: Graph, within: int | None = None) -> list[int]:
    remaining = g.vertex_mask if within is None else within
    masks = []
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        block = _reach(g, start, remaining)
        masks.append(block)
        remaining &= ~block
    return masks


def components(g: Graph) -> ComponentPartition:
    """Connected components, ordered by their smallest vertex."""
    return ComponentPartition(tuple(frozenset(iter_bits(mask)) for mask in _component_masks(g)))


def is_connected(g: Graph) -> bool:
    return _reach(g, 0, g.vertex_mask) == g.vertex_mask


def _eccentricity(g: Graph, start: int, within: int) -> float:
    seen = 1 << start
    frontier = seen
    depth = 0
    while True:
        grown = 0
        for v in iter_bits(frontier):
            grown |= g.rows[v]
        frontier = grown & within & ~seen
        if not frontier:
            break
        seen |= frontier
        depth += 1
    return depth if seen == within else math.inf


def diameter(g: Graph, within: int | None = None) -> float:
    """Longest shortest path; math.inf when the (induced) graph is disconnected."""
    mask = g.vertex_mask if within is None else within
    return max(_eccentricity(g, v, mask) for v in iter_bits(mask))


def contains_induced(g: Graph, pattern: Graph) -> frozenset[int] | None:
    """First vertex set S (in lexicographic order) with g[S] isomorphic to pattern, or None."""
    if pattern.order > MAX_PATTERN_ORDER:
        raise LimitExceeded(f"induced-subgraph patterns are limited to {MAX_PATTERN_ORDER} vertices, got {pattern.order}")
    if pattern.order > g.order:
        return None

    target = canonical_form(pattern)
    edges = pattern.edge_count
    degrees = pattern.degree_sequence()
    candidates = [v for v in range(g.order) if g.degree(v) >= degrees[-1]]

    for subset in combinations(candidates, pattern.order):
        sub = g.induced(subset)
        if sub.edge_count != edges or sub.degree_sequence() != degrees:
            continue
        if canonical_form(sub) == target:
            return frozenset(subset)
    return None


def is_cograph(g: Graph) -> bool:
    if g.order <= 1:
        return True
    parts = _component_masks(g)
    if len(parts) > 1:
        return all(is_cograph(g.induced(list(iter_bits(mask)))) for mask in parts)
    co = complement(g)
    co_parts = _component_masks(co)
    if len(co_parts) == 1:
        return False
    return all(is_cograph(co.induced(list(iter_bits(mask)))) for mask in co_parts)


def connected_induced_subsets(g: Graph, minimum: int = 2) -> Iterator[int]:
    """Vertex masks of every connected induced subgraph with at least `minimum` vertices."""
    for mask in range(1, 1 << g.order):
        if mask.bit_count() < minimum:
            continue
        start = (mask & -mask).bit_length() - 1
        if _reach(g, start, mask) == mask:
            yield mask


def complement_is_connected(g: Graph) -> bool:
    return is_connected(complement(g))
