# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from typing import TYPE_CHECKING, Any

from lapmult.catalog import catalog
from lapmult.classify import classify
from lapmult.errors import UnsupportedError
from lapmult.families import ALIASES, FAMILIES
from lapmult.graph6 import to_graph6
from lapmult.numeric import MAX_NUMERIC_ORDER, numeric_eigenvalues
from lapmult.spectrum import laplacian, spectrum_of

if TYPE_CHECKING:
    from lapmult.interface import LapMultProtocol as LapMult
    from lapmult.mixins.report import ReportDocument


class CommandsMixin:
    async def run_command(self: LapMult) -> int:
        command = getattr(self.args, "command", None)
        match command:
            case "spectrum":
                report, status = self.cmd_spectrum()
            case "classify":
                report, status = self.cmd_classify()
            case "catalog":
                report, status = self.cmd_catalog()
            case "verify":
                report, status = await self.cmd_verify()
            case "families":
                report, status = self.cmd_families()
            case _:
                raise UnsupportedError(f"unknown command {command!r}")

        self.emit(report, report.result.get("verdict", "ok") if isinstance(report.result, dict) else "ok")
        return status

    def cmd_spectrum(self: LapMult) -> tuple[ReportDocument, int]:
        results = []
        for descriptor, g in self.graph_inputs():
            spectrum = spectrum_of(g)
            payload: dict[str, Any] = {
                "input": descriptor,
                "order": g.order,
                "graph6": to_graph6(g),
                "spectrum": self.spectrum_payload(spectrum),
                "distinct_count": spectrum.distinct_count,
            }
            if g.order <= MAX_NUMERIC_ORDER:
                payload["numeric"] = numeric_eigenvalues(laplacian(g))
            results.append(payload)
        self.logger.debug(f"computed {len(results)} spectra")

        result = {"graphs": results, "verdict": "ok"}
        return self.build_report("spectrum", [r["input"] for r in results], result), 0

    def cmd_classify(self: LapMult) -> tuple[ReportDocument, int]:
        results = []
        for descriptor, g in self.graph_inputs():
            report = classify(g, self.predicate)
            payload = self.classification_payload(report)
            payload["input"] = descriptor
            results.append(payload)

        verdict = " ".join(r["class"] for r in results)
        result = {"graphs": results, "predicate": str(self.predicate), "verdict": verdict}
        return self.build_report("classify", [r["input"] for r in results], result), 0

    def cmd_catalog(self: LapMult) -> tuple[ReportDocument, int]:
        n, k = self.args.n, self.args.k  # type: ignore[union-attr]
        entries = [self.catalog_entry_payload(entry) for entry in catalog(n, k)]
        mismatched = [entry["label"] for entry in entries if not entry["match"]]
        verdict = "ok" if not mismatched else f"FAIL: {len(mismatched)} predicted spectra differ ({', '.join(mismatched)})"
        result = {"n": n, "k": k, "count": len(entries), "entries": entries, "verdict": verdict}
        return self.build_report("catalog", {"n": n, "k": k}, result), 0 if not mismatched else 1

    def cmd_families(self: LapMult) -> tuple[ReportDocument, int]:
        aliases: dict[str, list[str]] = {}
        for alias, target in ALIASES.items():
            aliases.setdefault(str(target), []).append(alias)

        listing = [
            {
                "name": str(spec.family),
                "arity": "variadic" if spec.arity is None else spec.arity,
                "constraints": spec.constraints,
                "aliases": sorted(aliases.get(str(spec.family), [])),
            }
            for spec in FAMILIES.values()
        ]
        result = {"families": sorted(listing, key=lambda item: str(item["name"])), "verdict": "ok"}
        return self.build_report("families", None, result), 0
