from argparse import Namespace
from asyncio import AbstractEventLoop
from concurrent.futures import ProcessPoolExecutor
from logging import Logger
from pathlib import Path
from typing import Any, Callable, Protocol, Sequence, TypeVar

from lapmult.catalog import CatalogEntry
from lapmult.classify import ClassificationReport, Predicate
from lapmult.enumeration import GraphEnumerator
from lapmult.graph import Graph
from lapmult.mixins.report import ReportDocument
from lapmult.spectrum import ExactSpectrum
from lapmult.verification import EnumerationSummary, GraphProfile

T = TypeVar("T")
R = TypeVar("R")


class LapMultProtocol(Protocol):
    args: Namespace | None
    cache_dir: Path | None
    config: dict[str, Any]
    enumerator: GraphEnumerator
    jobs: int
    logger: Logger
    loop: AbstractEventLoop
    pool: ProcessPoolExecutor | None
    predicate: Predicate
    running: bool
    started: float
    tolerance: dict[str, float]

    async def cmd_verify(self) -> tuple[ReportDocument, int]: ...
    async def enumerate_level(self, n: int) -> tuple[str, ...]: ...
    async def map_chunks(self, fn: Callable[[list[T]], R], chunks: Sequence[list[T]]) -> list[R]: ...
    async def profile_level(self, n: int) -> list[GraphProfile]: ...
    async def run_command(self) -> int: ...

    def _read_version_file(self) -> str: ...
    def build_report(self, command: str, input: Any, result: Any) -> ReportDocument: ...
    def catalog_entry_payload(self, entry: CatalogEntry) -> dict[str, Any]: ...
    def classification_payload(self, report: ClassificationReport) -> dict[str, Any]: ...
    def cmd_catalog(self) -> tuple[ReportDocument, int]: ...
    def cmd_classify(self) -> tuple[ReportDocument, int]: ...
    def cmd_families(self) -> tuple[ReportDocument, int]: ...
    def cmd_spectrum(self) -> tuple[ReportDocument, int]: ...
    def emit(self, report: ReportDocument, verdict: str) -> None: ...
    def graph_inputs(self) -> list[tuple[str, Graph]]: ...
    def load_config(self, config_arg: Any | None = None) -> dict[str, Any]: ...
    def parse_family_spec(self, tokens: Sequence[str]) -> tuple[str, Graph]: ...
    def read_file(self, file_name: str) -> str: ...
    def read_graph6_file(self, file_name: str) -> list[tuple[str, Graph]]: ...
    def render_report(self, report: ReportDocument) -> str: ...
    def restore_state(self) -> None: ...
    def save_state(self) -> None: ...
    def spectrum_payload(self, spectrum: ExactSpectrum) -> dict[str, Any]: ...
    def summary_payload(self, summary: EnumerationSummary) -> dict[str, Any]: ...
