# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from dataclasses import dataclass
import sys
import time
import yaml

from typing import TYPE_CHECKING, Any

from lapmult.catalog import CatalogEntry
from lapmult.classify import ClassificationReport
from lapmult.graph6 import to_graph6
from lapmult.spectrum import ExactSpectrum, spectrum_of
from lapmult.verification import EnumerationSummary

if TYPE_CHECKING:
    from lapmult.interface import LapMultProtocol as LapMult


@dataclass
class ReportDocument:
    command: str
    version: str
    input: Any
    result: Any
    timing: float

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "version": self.version,
            "input": self.input,
            "result": self.result,
            "timing": round(self.timing, 3),
        }


class ReportMixin:
    def spectrum_payload(self: LapMult, spectrum: ExactSpectrum) -> dict[str, Any]:
        return {
            "integer": [[value, mult] for value, mult in spectrum.integer_part],
            "residual": list(spectrum.residual.coeffs) if spectrum.residual else None,
            "residual_roots": spectrum.residual_roots(),
            "charpoly": list(spectrum.charpoly().coeffs),
        }

    def catalog_entry_payload(self: LapMult, entry: CatalogEntry) -> dict[str, Any]:
        computed = spectrum_of(entry.graph)
        return {
            "graph6": to_graph6(entry.graph),
            "family": str(entry.family),
            "params": list(entry.params),
            "label": entry.label,
            "source": entry.source,
            "predicted": self.spectrum_payload(entry.predicted_spectrum),
            "computed": self.spectrum_payload(computed),
            "match": computed.charpoly() == entry.predicted_spectrum.charpoly(),
        }

    def classification_payload(self: LapMult, report: ClassificationReport) -> dict[str, Any]:
        matched = report.matched_family
        return {
            "order": report.order,
            "spectrum": self.spectrum_payload(report.spectrum),
            "distinct_count": report.distinct_count,
            "k_max": report.k_max,
            "class": str(report.graph_class),
            "catalog_k": report.catalog_k,
            "matched_family": (
                None
                if matched is None
                else {"family": str(matched.family), "params": list(matched.params), "label": matched.label, "source": matched.source, "method": report.match_method}
            ),
        }

    def summary_payload(self: LapMult, summary: EnumerationSummary) -> dict[str, Any]:
        return summary.to_dict()

    def build_report(self: LapMult, command: str, input: Any, result: Any) -> ReportDocument:
        return ReportDocument(
            command=command,
            version=self.config["version"],
            input=input,
            result=result,
            timing=time.monotonic() - self.started,
        )

    def render_report(self: LapMult, report: ReportDocument) -> str:
        return yaml.safe_dump(report.to_dict(), sort_keys=True, default_flow_style=False)

    def emit(self: LapMult, report: ReportDocument, verdict: str) -> None:
        if getattr(self.args, "quiet", False):
            sys.stdout.write(f"{verdict}\n")
        else:
            sys.stdout.write(self.render_report(report))
        sys.stdout.flush()
