# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from json_logging import get_logger

from lapmult.canon import canonical_graph6
from lapmult.catalog import CatalogEntry, catalog, catalog_members
from lapmult.classify import GraphClass, Predicate, assign_class, is_member
from lapmult.enumeration import DEFAULT_ENUMERATOR, GraphEnumerator
from lapmult.errors import LimitExceeded, UnsupportedError
from lapmult.families import FamilyId, family, path_graph
from lapmult.graph import Graph, complement, iter_bits, join
from lapmult.graph6 import from_graph6
from lapmult.numeric import EIGEN_TOLERANCE, matches_integer_eigenvalues, numeric_eigenvalues
from lapmult.spectrum import (
    ExactSpectrum,
    charpoly,
    complement_spectrum,
    extract_spectrum,
    join_spectrum,
    laplacian,
    lifted_eigenvector_failures,
    spectrum_of,
    submatrix_divisibility_failures,
)
from lapmult.structure import complement_is_connected, components, connected_induced_subsets, contains_induced, diameter, is_cograph, is_connected

logger = get_logger(__name__)

MIN_VERIFY_ORDER = 4
MAX_VERIFY_ORDER = 9
MAX_BUCKET_ORDER = 8

# lemma ids
ZERO_MULTIPLICITY = "zero-multiplicity-components"
TWO_EIGENVALUES = "two-eigenvalue-characterization"
COMPLEMENT_SPECTRUM = "complement-spectrum"
JOIN_SPECTRUM = "join-spectrum"
DIAMETER_BOUND = "diameter-bound"
COGRAPH_EQUIVALENCE = "cograph-equivalence"
SUBMATRIX_DIVISIBILITY = "submatrix-divisibility"
LIFTED_EIGENVECTORS = "lifted-eigenvectors"
INTEGRALITY = "integrality"
FORBIDDEN_SUBGRAPHS = "forbidden-subgraphs"
COMPLEMENT_DISCONNECTED = "complement-disconnected"
MEMBER_COGRAPH = "member-cograph"
LARGEST_EIGENVALUE_N = "largest-eigenvalue-n"
NUMERIC_AGREEMENT = "numeric-agreement"
MEMBER_SHAPE = "member-shape"

# highest order each per-graph suite runs at
LEMMA_MAX_ORDER = {
    ZERO_MULTIPLICITY: 7,
    TWO_EIGENVALUES: 7,
    COMPLEMENT_SPECTRUM: 8,
    DIAMETER_BOUND: 8,
    COGRAPH_EQUIVALENCE: 7,
    INTEGRALITY: 8,
}


@dataclass(frozen=True, order=True)
class LemmaViolation:
    lemma: str
    graph6: str
    detail: str

    def to_dict(self) -> dict[str, str]:
        return {"lemma": self.lemma, "graph6": self.graph6, "detail": self.detail}


@dataclass(frozen=True, order=True)
class DlsBucket:
    charpoly: tuple[int, ...]
    graph6s: tuple[str, ...]

    def to_dict(self) -> dict[str, Any]:
        return {"charpoly": list(self.charpoly), "graph6": list(self.graph6s)}


@dataclass(frozen=True)
class GraphProfile:
    graph6: str
    connected: bool
    charpoly: tuple[int, ...]
    spectrum: ExactSpectrum
    violations: tuple[LemmaViolation, ...] = ()


@dataclass
class EnumerationSummary:
    order: int
    predicate: Predicate
    total_graphs: int
    connected_graphs: int
    found_members: list[str]
    catalog_members: list[str]
    set_equal: bool
    dls_checked: bool = True
    dls_violations: list[DlsBucket] = field(default_factory=list)
    lemma_violations: list[LemmaViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.set_equal and not self.dls_violations and not self.lemma_violations

    def verdict(self) -> str:
        if self.ok:
            return "ok"
        problems = []
        if not self.set_equal:
            problems.append("member set differs from catalog")
        if self.dls_violations:
            problems.append(f"{len(self.dls_violations)} dls violation(s)")
        if self.lemma_violations:
            problems.append(f"{len(self.lemma_violations)} lemma violation(s)")
        return "FAIL: " + ", ".join(problems)

    def to_dict(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "predicate": str(self.predicate),
            "total_graphs": self.total_graphs,
            "connected_graphs": self.connected_graphs,
            "found_members": self.found_members,
            "catalog_members": self.catalog_members,
            "set_equal": self.set_equal,
            "dls_checked": self.dls_checked,
            "dls_violations": [bucket.to_dict() for bucket in self.dls_violations],
            "lemma_violations": [v.to_dict() for v in self.lemma_violations],
            "ok": self.ok,
        }


# Per-graph suites --------------------------------------------------------------------------------


def is_clique_union(g: Graph) -> bool:
    """True iff g is aK_b united with cK_1 for one b >= 2 and a >= 1."""
    sizes = set()
    for block in components(g).blocks:
        size = len(block)
        inside = sum(len(block & set(iter_bits(g.rows[v]))) for v in block) // 2
        if inside != size * (size - 1) // 2:
            return False
        if size > 1:
            sizes.add(size)
    return len(sizes) == 1


def cograph_violation(g: Graph) -> str | None:
    """The four cograph characterizations must agree; returns a description when they don't."""
    subsets = list(connected_induced_subsets(g))
    verdicts = {
        "recursive": is_cograph(g),
        "p4-free": contains_induced(g, path_graph(4)) is None,
        "diameter<=2": all(diameter(g, mask) <= 2 for mask in subsets),
        "complements-disconnected": all(not complement_is_connected(g.induced(list(iter_bits(mask)))) for mask in subsets),
    }
    if len(set(verdicts.values())) == 1:
        return None
    return ", ".join(f"{name}={value}" for name, value in verdicts.items())


def profile_graph(text: str) -> GraphProfile:
    g = from_graph6(text)
    n = g.order
    connected = is_connected(g)
    poly = charpoly(laplacian(g))
    spectrum = extract_spectrum(poly, laplacian=True)
    found: list[LemmaViolation] = []

    def flag(lemma: str, detail: str) -> None:
        found.append(LemmaViolation(lemma, text, detail))

    if n <= LEMMA_MAX_ORDER[ZERO_MULTIPLICITY]:
        count = components(g).count
        if spectrum.multiplicity(0) != count:
            flag(ZERO_MULTIPLICITY, f"m(0)={spectrum.multiplicity(0)} but {count} components")

    if n <= LEMMA_MAX_ORDER[TWO_EIGENVALUES]:
        two = spectrum.distinct_count == 2
        if two != is_clique_union(g):
            flag(TWO_EIGENVALUES, f"distinct eigenvalues={spectrum.distinct_count}, clique union={not two}")

    if n <= LEMMA_MAX_ORDER[COMPLEMENT_SPECTRUM] and spectrum.is_integral:
        predicted = complement_spectrum(spectrum)
        direct = spectrum_of(complement(g))
        if predicted != direct:
            flag(COMPLEMENT_SPECTRUM, f"formula {predicted}, direct {direct}")

    if connected and n <= LEMMA_MAX_ORDER[DIAMETER_BOUND]:
        d = diameter(g)
        if d > spectrum.distinct_count - 1:
            flag(DIAMETER_BOUND, f"diameter {d} with {spectrum.distinct_count} distinct eigenvalues")

    if connected and n <= LEMMA_MAX_ORDER[COGRAPH_EQUIVALENCE]:
        detail = cograph_violation(g)
        if detail:
            flag(COGRAPH_EQUIVALENCE, detail)

    if connected and n <= LEMMA_MAX_ORDER[INTEGRALITY]:
        for factor, mult in spectrum.residual_factors():
            if 2 * mult >= n:
                flag(INTEGRALITY, f"non-integer eigenvalue(s) of {factor} with multiplicity {mult}")

    return GraphProfile(text, connected, poly.coeffs, spectrum, tuple(found))


def profile_chunk(texts: Sequence[str]) -> list[GraphProfile]:
    return [profile_graph(text) for text in texts]


# Cross-graph suites ------------------------------------------------------------------------------


def join_spectrum_violations(total: int, enumerator: GraphEnumerator | None = None) -> list[LemmaViolation]:
    """Join formula against direct computation for every residual-free pair of orders a + b = total."""
    enumerator = enumerator or DEFAULT_ENUMERATOR
    found = []
    for a in range(1, total // 2 + 1):
        b = total - a
        left = [(g, s) for g in enumerator.all_graphs(a) if (s := spectrum_of(g)).is_integral]
        right = left if a == b else [(h, s) for h in enumerator.all_graphs(b) if (s := spectrum_of(h)).is_integral]
        for g, s_g in left:
            for h, s_h in right:
                predicted = join_spectrum(s_g, s_h)
                direct = spectrum_of(join(g, h))
                if predicted != direct:
                    found.append(LemmaViolation(JOIN_SPECTRUM, canonical_graph6(g) + "+" + canonical_graph6(h), f"formula {predicted}, direct {direct}"))
    return sorted(found)


def spectrum_buckets_from(profiles: Iterable[GraphProfile]) -> dict[tuple[int, ...], list[str]]:
    buckets: dict[tuple[int, ...], list[str]] = defaultdict(list)
    for profile in profiles:
        if profile.connected:
            buckets[profile.charpoly].append(profile.graph6)
    return {key: sorted(value) for key, value in sorted(buckets.items())}


def spectrum_buckets(n: int, enumerator: GraphEnumerator | None = None) -> dict[tuple[int, ...], list[str]]:
    if not 1 <= n <= MAX_BUCKET_ORDER:
        raise LimitExceeded(f"spectrum buckets support 1 <= n <= {MAX_BUCKET_ORDER}, got {n}")
    enumerator = enumerator or DEFAULT_ENUMERATOR
    buckets: dict[tuple[int, ...], list[str]] = defaultdict(list)
    for g in enumerator.connected_graphs(n):
        buckets[charpoly(laplacian(g)).coeffs].append(canonical_graph6(g))
    return {key: sorted(value) for key, value in sorted(buckets.items())}


def _catalog_alpha(entry: CatalogEntry, k: int) -> int:
    return next(value for value, mult in entry.predicted_spectrum.integer_part if value and mult == k)


def catalog_lemma_violations(n: int, tolerance: float = EIGEN_TOLERANCE) -> list[LemmaViolation]:
    """Principal-submatrix and numeric checks on every catalog member of order n."""
    found = []
    for k in (n - 1, n - 2, n - 3):
        for entry in catalog(n, k):
            g = entry.graph
            text = canonical_graph6(g)
            spectrum = spectrum_of(g)
            if not matches_integer_eigenvalues(spectrum.integer_values(), numeric_eigenvalues(laplacian(g)), tolerance):
                found.append(LemmaViolation(NUMERIC_AGREEMENT, text, f"{entry.label}: numeric eigenvalues disagree with {spectrum}"))
            if n < 6:
                continue
            alpha, m = _catalog_alpha(entry, k), n - k
            for rows in submatrix_divisibility_failures(g, alpha, m, spectrum):
                found.append(LemmaViolation(SUBMATRIX_DIVISIBILITY, text, f"{entry.label}: rows {list(rows)}"))
            for rows, why in lifted_eigenvector_failures(g, alpha, m, spectrum):
                found.append(LemmaViolation(LIFTED_EIGENVECTORS, text, f"{entry.label}: rows {list(rows)}: {why}"))
    return found


def member_lemma_violations(n: int, members: Sequence[GraphProfile], gnr_graph6s: set[str]) -> list[LemmaViolation]:
    """Structure every member of order n >= 6 must have."""
    found = []
    forbidden = [(name, family(name)) for name in (FamilyId.J1, FamilyId.J2, FamilyId.J3)]
    for profile in members:
        g = from_graph6(profile.graph6)
        for name, pattern in forbidden:
            witness = contains_induced(g, pattern)
            if witness is not None:
                found.append(LemmaViolation(FORBIDDEN_SUBGRAPHS, profile.graph6, f"induced {name} on {sorted(witness)}"))
        if profile.graph6 not in gnr_graph6s:
            if complement_is_connected(g):
                found.append(LemmaViolation(COMPLEMENT_DISCONNECTED, profile.graph6, "complement is connected"))
            if not is_cograph(g):
                found.append(LemmaViolation(MEMBER_COGRAPH, profile.graph6, "member is not a cograph"))
        try:
            graph_class = assign_class(profile.spectrum, n)
        except UnsupportedError as err:
            found.append(LemmaViolation(MEMBER_SHAPE, profile.graph6, str(err)))
            continue
        if graph_class in (GraphClass.G1, GraphClass.G2) and not profile.spectrum.multiplicity(n):
            found.append(LemmaViolation(LARGEST_EIGENVALUE_N, profile.graph6, f"largest eigenvalue is not {n}: {profile.spectrum}"))
    return found


def dls_violations(n: int, buckets: dict[tuple[int, ...], list[str]]) -> list[DlsBucket]:
    members = {canonical_graph6(entry.graph) for entry in catalog_members(n)}
    return sorted(DlsBucket(key, tuple(texts)) for key, texts in buckets.items() if len(texts) > 1 and members & set(texts))


def build_summary(
    n: int,
    profiles: Sequence[GraphProfile],
    predicate: Predicate = Predicate.MAX,
    check_dls: bool = True,
    extra_violations: Iterable[LemmaViolation] = (),
    tolerance: float = EIGEN_TOLERANCE,
) -> EnumerationSummary:
    connected = [p for p in profiles if p.connected]
    members = [p for p in connected if is_member(p.spectrum, n - 3, predicate)]
    expected = catalog(n, n - 3)

    found_members = sorted(p.graph6 for p in members)
    catalog_graph6s = sorted(canonical_graph6(entry.graph) for entry in expected)

    violations = [v for p in profiles for v in p.violations]
    violations.extend(extra_violations)
    violations.extend(catalog_lemma_violations(n, tolerance))
    if n >= 6:
        gnr = {canonical_graph6(entry.graph) for entry in expected if entry.family is FamilyId.GNR}
        violations.extend(member_lemma_violations(n, members, gnr))

    dls = dls_violations(n, spectrum_buckets_from(profiles)) if check_dls else []

    summary = EnumerationSummary(
        order=n,
        predicate=predicate,
        total_graphs=len(profiles),
        connected_graphs=len(connected),
        found_members=found_members,
        catalog_members=catalog_graph6s,
        set_equal=set(found_members) == set(catalog_graph6s),
        dls_checked=check_dls,
        dls_violations=dls,
        lemma_violations=sorted(set(violations)),
    )
    logger.info(f"verified order {n}: {summary.verdict()}")
    return summary


def check_verify_order(n: int) -> None:
    if not MIN_VERIFY_ORDER <= n <= MAX_VERIFY_ORDER:
        raise LimitExceeded(f"verification supports {MIN_VERIFY_ORDER} <= n <= {MAX_VERIFY_ORDER}, got {n}")


def verify_theorem(
    n: int,
    predicate: Predicate = Predicate.MAX,
    check_dls: bool = True,
    enumerator: GraphEnumerator | None = None,
    tolerance: float = EIGEN_TOLERANCE,
) -> EnumerationSummary:
    """Single-process verification run; the CLI spreads the same steps over a worker pool."""
    check_verify_order(n)
    enumerator = enumerator or DEFAULT_ENUMERATOR
    profiles = profile_chunk(enumerator.level(n))
    joins = join_spectrum_violations(n, enumerator)
    return build_summary(n, profiles, predicate, check_dls, joins, tolerance)
