# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass
from enum import StrEnum

from lapmult.canon import MAX_CANON_ORDER, is_isomorphic
from lapmult.catalog import CatalogEntry, catalog
from lapmult.errors import UnsupportedError
from lapmult.graph import Graph
from lapmult.spectrum import ExactSpectrum, charpoly, extract_spectrum, laplacian
from lapmult.structure import is_connected

MIN_CLASSIFY_ORDER = 4


class GraphClass(StrEnum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    NOT_MEMBER = "not-member"
    SMALL_N_SPECIAL = "small-n-special"


class Predicate(StrEnum):
    MAX = "max"  # largest nonzero multiplicity equals k
    LITERAL = "literal"  # some nonzero eigenvalue has multiplicity exactly k


def k_max(s: ExactSpectrum) -> int:
    """Largest multiplicity of a nonzero eigenvalue; residual roots count with their exact multiplicity."""
    return max((mult for _, mult in s.distinct_nonzero()), default=0)


def is_member(s: ExactSpectrum, k: int, predicate: Predicate = Predicate.MAX) -> bool:
    match predicate:
        case Predicate.MAX:
            return k_max(s) == k
        case Predicate.LITERAL:
            return any(mult == k for _, mult in s.distinct_nonzero())
    raise UnsupportedError(f"unknown predicate {predicate!r}")


@dataclass(frozen=True)
class ClassificationReport:
    order: int
    spectrum: ExactSpectrum
    distinct_count: int
    k_max: int
    graph_class: GraphClass
    matched_family: CatalogEntry | None = None
    match_method: str | None = None  # "isomorphism" or "spectrum"
    catalog_k: int | None = None


def assign_class(s: ExactSpectrum, n: int) -> GraphClass:
    nonzero = s.distinct_nonzero()
    position = next((i for i, (_, mult) in enumerate(nonzero) if mult == n - 3), None)
    if position is None:
        raise UnsupportedError(f"no eigenvalue of multiplicity {n - 3} in {s}")
    match len(nonzero):
        case 2:
            return GraphClass.G1 if position == 0 else GraphClass.G2
        case 3:
            return (GraphClass.G3, GraphClass.G4, GraphClass.G5)[position]
    raise UnsupportedError(f"unexpected spectrum shape for a member of order {n}: {s}")


def match_catalog(g: Graph, entries: list[CatalogEntry], spectrum: ExactSpectrum) -> tuple[CatalogEntry | None, str | None]:
    target = spectrum.charpoly()
    for entry in entries:
        if entry.predicted_spectrum.charpoly() != target:
            continue
        if g.order > MAX_CANON_ORDER:
            return entry, "spectrum"
        if is_isomorphic(g, entry.graph):
            return entry, "isomorphism"
    return None, None


def classify(g: Graph, predicate: Predicate = Predicate.MAX) -> ClassificationReport:
    n = g.order
    if n < MIN_CLASSIFY_ORDER:
        raise UnsupportedError(f"classification needs n >= {MIN_CLASSIFY_ORDER}, got {n}")
    if not is_connected(g):
        raise UnsupportedError("classification needs a connected graph")

    spectrum = extract_spectrum(charpoly(laplacian(g)), laplacian=True)
    top = k_max(spectrum)

    if is_member(spectrum, n - 3, predicate):
        graph_class = GraphClass.SMALL_N_SPECIAL if n < 6 else assign_class(spectrum, n)
        catalog_k: int | None = n - 3
    else:
        graph_class = GraphClass.NOT_MEMBER
        catalog_k = top if top in (n - 1, n - 2) else None

    matched, method = (None, None)
    if catalog_k is not None:
        matched, method = match_catalog(g, catalog(n, catalog_k), spectrum)

    return ClassificationReport(
        order=n,
        spectrum=spectrum,
        distinct_count=spectrum.distinct_count,
        k_max=top,
        graph_class=graph_class,
        matched_family=matched,
        match_method=method,
        catalog_k=catalog_k,
    )
