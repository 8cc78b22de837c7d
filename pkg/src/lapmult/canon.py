# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass

from lapmult.errors import LimitExceeded
from lapmult.graph import Graph
from lapmult.graph6 import to_graph6

MAX_CANON_ORDER = 10

Cells = list[tuple[int, ...]]


@dataclass(frozen=True, slots=True, order=True)
class CanonicalForm:
    """Upper-triangle bits of the canonically labeled graph, pair (0,1) most significant.

    Pairs run column-major, (0,1), (0,2), (1,2), (0,3), ..., the same order graph6 uses, so
    sorting forms of one order by `encoding` sorts their graph6 strings too.
    """

    order: int
    encoding: int

    def to_graph(self) -> Graph:
        rows = [0] * self.order
        shift = self.order * (self.order - 1) // 2
        for j in range(1, self.order):
            for i in range(j):
                shift -= 1
                if self.encoding >> shift & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(self.order, tuple(rows))

    def to_graph6(self) -> str:
        return to_graph6(self.to_graph())


def _encode(rows: tuple[int, ...], lab: list[int]) -> int:
    code = 0
    for j in range(1, len(lab)):
        row = rows[lab[j]]
        for i in range(j):
            code = code << 1 | (row >> lab[i] & 1)
    return code


def _refine(rows: tuple[int, ...], cells: Cells) -> Cells:
    # split every cell by neighbor counts into the current cells until nothing splits
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                key = tuple((rows[v] & mask).bit_count() for mask in masks)
                groups.setdefault(key, []).append(v)
            refined.extend(tuple(groups[key]) for key in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


def _twins(rows: tuple[int, ...], u: int, v: int) -> bool:
    return (rows[u] ^ rows[v]) & ~(1 << u | 1 << v) == 0


def _search(rows: tuple[int, ...], cells: Cells, best: list[tuple[int, list[int]]]) -> None:
    cells = _refine(rows, cells)
    if len(cells) == len(rows):
        lab = [cell[0] for cell in cells]
        code = _encode(rows, lab)
        if not best or code < best[0][0]:
            best[:] = [(code, lab)]
        return

    target = min((i for i, cell in enumerate(cells) if len(cell) > 1), key=lambda i: len(cells[i]))
    cell = cells[target]
    chosen: list[int] = []
    for v in cell:
        # swapping twins is an automorphism fixing everything individualized so far
        if any(_twins(rows, u, v) for u in chosen):
            continue
        chosen.append(v)
        rest = tuple(u for u in cell if u != v)
        _search(rows, cells[:target] + [(v,), rest] + cells[target + 1 :], best)


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """Permutation taking g to its canonical labeling: vertex v becomes perm[v]."""
    if g.order > MAX_CANON_ORDER:
        raise LimitExceeded(f"canonical form supports at most {MAX_CANON_ORDER} vertices, got {g.order}")
    best: list[tuple[int, list[int]]] = []
    _search(g.rows, [tuple(range(g.order))], best)
    perm = [0] * g.order
    for position, v in enumerate(best[0][1]):
        perm[v] = position
    return tuple(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    perm = canonical_labeling(g)
    lab = sorted(range(g.order), key=perm.__getitem__)
    return CanonicalForm(g.order, _encode(g.rows, lab))


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).to_graph6()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.order != h.order or g.edge_count != h.edge_count:
        return False
    if g.degree_sequence() != h.degree_sequence():
        return False
    return canonical_form(g) == canonical_form(h)
