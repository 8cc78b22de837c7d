# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from json_logging import get_logger

from lapmult.canon import MAX_CANON_ORDER, canonical_form
from lapmult.errors import UnsupportedError
from lapmult.families import FamilyId, family
from lapmult.graph import Graph
from lapmult.polynomial import Poly
from lapmult.spectrum import ExactSpectrum, extract_spectrum, spectrum_of

logger = get_logger(__name__)

MAX_CATALOG_CHECK_ORDER = 40

# source tags
PRIOR_COMPLETE = "prior-complete"
PRIOR_N_MINUS_2 = "prior-n-2"
SMALL_ORDER = "small-order"
CLASS_G1 = "class-G1"
CLASS_G2 = "class-G2"
CLASS_G3 = "class-G3"
CLASS_G4 = "class-G4"
CLASS_G5 = "class-G5"


@dataclass(frozen=True)
class CatalogEntry:
    family: FamilyId
    params: tuple[int, ...]
    graph: Graph = field(repr=False)
    predicted_spectrum: ExactSpectrum
    source: str
    label: str

    def __post_init__(self) -> None:
        if self.predicted_spectrum.order != self.graph.order:
            raise ValueError(f"{self.label}: predicted spectrum has order {self.predicted_spectrum.order}, graph has {self.graph.order}")


@dataclass(frozen=True)
class CatalogMismatch:
    entry: CatalogEntry
    computed: ExactSpectrum

    def __str__(self) -> str:
        return f"{self.entry.label}: predicted {self.entry.predicted_spectrum}, computed {self.computed}"


def _entry(name: FamilyId, params: Sequence[int], values: Sequence[int], source: str, label: str) -> CatalogEntry:
    g = family(name, params)
    return CatalogEntry(name, tuple(params), g, ExactSpectrum.from_values(g.order, values), source, label)


def _rep(value: int, count: int) -> list[int]:
    return [value] * count


def _gnr_entry(half: int, r: int) -> CatalogEntry:
    # eigenvalue `half` with multiplicity 2*half-3, zero, and the roots of
    # x^2 - (3*half - 2r) x + 2 (half - r)^2
    quadratic = Poly((2 * (half - r) ** 2, -(3 * half - 2 * r), 1))
    predicted = extract_spectrum(Poly.from_roots(_rep(half, 2 * half - 3) + [0]) * quadratic, laplacian=True)
    return CatalogEntry(FamilyId.GNR, (half, r), family(FamilyId.GNR, (half, r)), predicted, CLASS_G4, f"G({half},{r})")


def _complete_catalog(n: int) -> list[CatalogEntry]:
    return [_entry(FamilyId.COMPLETE, [n], _rep(n, n - 1) + [0], PRIOR_COMPLETE, f"K{n}")]


def _n_minus_2_catalog(n: int) -> list[CatalogEntry]:
    entries = []
    if n % 2 == 0:
        half = n // 2
        entries.append(_entry(FamilyId.COMPLETE_BIPARTITE, [half, half], [n] + _rep(half, n - 2) + [0], PRIOR_N_MINUS_2, f"K{half},{half}"))
    entries.append(_entry(FamilyId.STAR, [n], [n] + _rep(1, n - 2) + [0], PRIOR_N_MINUS_2, f"K1,{n - 1}"))
    entries.append(_entry(FamilyId.COMPLETE_MINUS_EDGE, [n], _rep(n, n - 2) + [n - 2, 0], PRIOR_N_MINUS_2, f"K{n}-e"))
    return entries


def _order_four_catalog() -> list[CatalogEntry]:
    path = family(FamilyId.PATH, [4])
    path_spectrum = ExactSpectrum(4, ((2, 1), (0, 1)), Poly((2, -4, 1)))
    return [
        CatalogEntry(FamilyId.PATH, (4,), path, path_spectrum, SMALL_ORDER, "P4"),
        _entry(FamilyId.STAR_PLUS_EDGE, [4], [4, 3, 1, 0], SMALL_ORDER, "K1,3+e"),
    ]


def _order_five_catalog() -> list[CatalogEntry]:
    cycle = family(FamilyId.CYCLE, [5])
    cycle_spectrum = ExactSpectrum(5, ((0, 1),), Poly((5, -5, 1)) ** 2)
    return [
        CatalogEntry(FamilyId.CYCLE, (5,), cycle, cycle_spectrum, SMALL_ORDER, "C5"),
        _entry(FamilyId.WHEEL, [5], [5, 5, 3, 3, 0], SMALL_ORDER, "K1 join C4"),
        _entry(FamilyId.COMPLETE_SPLIT, [2, 3], [5, 5, 2, 2, 0], SMALL_ORDER, "K2 join 3K1"),
        # members of the order-n families that already exist at five vertices
        _entry(FamilyId.EQ1_GRAPH, [5], [5, 5, 4, 2, 0], SMALL_ORDER, "K2 join (K2+K1)"),
        _entry(FamilyId.CONE_TWO_CLIQUES, [5], [5, 3, 3, 1, 0], SMALL_ORDER, "K1 join 2K2"),
        _entry(FamilyId.COMPLETE_PLUS_PENDANT, [5], [5, 4, 4, 1, 0], SMALL_ORDER, "K4+e"),
        _entry(FamilyId.COMPLETE_BIPARTITE, [2, 3], [5, 3, 2, 2, 0], SMALL_ORDER, "K2,3"),
        _entry(FamilyId.STAR_PLUS_EDGE, [5], [5, 3, 1, 1, 0], SMALL_ORDER, "K1,4+e"),
    ]


def _n_minus_3_catalog(n: int) -> list[CatalogEntry]:
    k = n - 3
    entries = [_entry(FamilyId.EQ1_GRAPH, [n], _rep(n, k) + [n - 1, n - 3, 0], CLASS_G3, f"K{n - 3} join (K2+K1)")]

    # G4
    if n % 2 == 1:
        entries.append(_entry(FamilyId.CONE_TWO_CLIQUES, [n], [n] + _rep((n + 1) // 2, k) + [1, 0], CLASS_G4, f"K1 join 2K{(n - 1) // 2}"))
    if n % 3 == 0:
        t = n // 3
        entries.append(_entry(FamilyId.SPLIT_JOIN, [n], [n] + _rep(2 * t, k) + [t, 0], CLASS_G4, f"{t}K1 join 2K{t}"))
    entries.append(_entry(FamilyId.COMPLETE_PLUS_PENDANT, [n], [n] + _rep(n - 1, k) + [1, 0], CLASS_G4, f"K{n - 1}+e"))
    if n % 2 == 0:
        entries.extend(_gnr_entry(n // 2, r) for r in range(1, n // 2))

    # G5
    entries.append(_entry(FamilyId.COMPLETE_BIPARTITE, [2, n - 2], [n, n - 2] + _rep(2, k) + [0], CLASS_G5, f"K2,{n - 2}"))
    if n % 2 == 0:
        half = n // 2
        entries.append(_entry(FamilyId.BALANCED_BIPARTITE_PLUS_EDGE, [n], [n, half + 2] + _rep(half, k) + [0], CLASS_G5, f"K{half},{half}+e"))
    entries.append(_entry(FamilyId.STAR_PLUS_EDGE, [n], [n, 3] + _rep(1, k) + [0], CLASS_G5, f"K1,{n - 1}+e"))

    # G1
    entries.append(_entry(FamilyId.COMPLETE_SPLIT, [n - 3, 3], _rep(n, k) + [n - 3, n - 3, 0], CLASS_G1, f"3K1 join K{n - 3}"))
    entries.append(_entry(FamilyId.C4_JOIN_COMPLETE, [n], _rep(n, k) + [n - 2, n - 2, 0], CLASS_G1, f"C4 join K{n - 4}"))

    # G2
    entries.append(_entry(FamilyId.COMPLETE_SPLIT, [2, n - 2], [n, n] + _rep(2, k) + [0], CLASS_G2, f"K2 join {n - 2}K1"))
    if n % 2 == 1:
        h = (n - 1) // 2
        entries.append(_entry(FamilyId.CONE_BIPARTITE, [n], [n, n] + _rep(h + 1, k) + [0], CLASS_G2, f"K1 join K{h},{h}"))
    if n % 3 == 0:
        t = n // 3
        entries.append(_entry(FamilyId.COMPLETE_MULTIPARTITE, [t, t, t], [n, n] + _rep(2 * t, k) + [0], CLASS_G2, f"K{t},{t},{t}"))
    return entries


def _dedupe(entries: list[CatalogEntry]) -> list[CatalogEntry]:
    seen: set[object] = set()
    unique = []
    for entry in entries:
        g = entry.graph
        key: object = canonical_form(g) if g.order <= MAX_CANON_ORDER else (g.order, entry.predicted_spectrum.charpoly())
        if key in seen:
            logger.debug(f"dropping {entry.label}: isomorphic to an earlier catalog entry")
            continue
        seen.add(key)
        unique.append(entry)
    return unique


def catalog(n: int, k: int) -> list[CatalogEntry]:
    if n < 4:
        raise UnsupportedError(f"catalogs start at n = 4, got n={n}")
    if k == n - 1:
        entries = _complete_catalog(n)
    elif k == n - 2:
        entries = _n_minus_2_catalog(n)
    elif k == n - 3 and n == 4:
        entries = _order_four_catalog()
    elif k == n - 3 and n == 5:
        entries = _order_five_catalog()
    elif k == n - 3:
        entries = _n_minus_3_catalog(n)
    else:
        raise UnsupportedError(f"no catalog for (n, k) = ({n}, {k}); k must be n-1, n-2 or n-3")
    return _dedupe(entries)


def catalog_members(n: int) -> list[CatalogEntry]:
    """Every entry of the n-1, n-2 and n-3 catalogs at order n."""
    return [entry for k in (n - 1, n - 2, n - 3) for entry in catalog(n, k)]


def verify_catalog_spectra(n: int) -> list[CatalogMismatch]:
    if not 4 <= n <= MAX_CATALOG_CHECK_ORDER:
        raise UnsupportedError(f"catalog spectra are checked for 4 <= n <= {MAX_CATALOG_CHECK_ORDER}, got {n}")
    mismatches = []
    for entry in catalog_members(n):
        computed = spectrum_of(entry.graph)
        if computed.charpoly() != entry.predicted_spectrum.charpoly():
            mismatches.append(CatalogMismatch(entry, computed))
    logger.debug(f"checked catalog spectra at n={n}: {len(mismatches)} mismatch(es)")
    return mismatches
