# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from typing import Any

import pytest
import yaml

from lapmult import app
from lapmult.catalog import CatalogEntry
from lapmult.core import LapMult
from lapmult.families import FamilyId, path_graph
from lapmult.spectrum import ExactSpectrum
from lapmult.verification import LemmaViolation


@pytest.fixture
def config_dir(tmp_path: Any) -> str:
    (tmp_path / "config.yaml").write_text(yaml.dump({"jobs": 1, "cache_dir": str(tmp_path / "cache")}))
    return str(tmp_path)


def printed(capsys: pytest.CaptureFixture[str]) -> list[str]:
    return capsys.readouterr().out.strip().splitlines()


# ===========================================================================
# TestParser
# ===========================================================================
class TestParser:
    def test_graph_inputs_are_exclusive(self) -> None:
        parser = app.build_parser()
        with pytest.raises(SystemExit):
            parser.parse_args(["spectrum", "--graph6", "Ch", "--family", "path", "4"])

    def test_family_takes_parameters(self) -> None:
        args = app.build_parser().parse_args(["classify", "--family", "gnr", "3", "1", "--predicate", "literal"])
        assert args.family == ["gnr", "3", "1"]
        assert args.predicate == "literal"

    def test_verify_options(self) -> None:
        args = app.build_parser().parse_args(["verify", "--n", "7", "--skip-dls", "--jobs", "4", "--no-cache"])
        assert (args.n, args.skip_dls, args.jobs, args.no_cache, args.stretch_n9) == (7, True, 4, True, False)


# ===========================================================================
# TestExitCodes
# ===========================================================================
class TestExitCodes:
    async def test_families_ok(self, config_dir: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert await app.async_main(["-c", config_dir, "-q", "families"]) == 0
        assert "ok" in printed(capsys)

    async def test_verify_quiet(self, config_dir: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert await app.async_main(["-c", config_dir, "-q", "verify", "--n", "4", "--no-cache"]) == 0
        assert "ok" in printed(capsys)

    async def test_verify_writes_cache(self, config_dir: str, tmp_path: Any) -> None:
        assert await app.async_main(["-c", config_dir, "-q", "verify", "--n", "5", "--cache", str(tmp_path / "mine")]) == 0
        assert (tmp_path / "mine" / "order-5.g6").exists()

    async def test_classify_quiet_prints_class(self, config_dir: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert await app.async_main(["-c", config_dir, "-q", "classify", "--family", "complete_bipartite", "2", "4"]) == 0
        assert "G5" in printed(capsys)

    async def test_usage_error(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir]) == 2

    async def test_help(self) -> None:
        assert await app.async_main(["--help"]) == 0

    async def test_bad_graph6(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "spectrum", "--graph6", "C~~"]) == 2

    async def test_unknown_family(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "spectrum", "--family", "petersen"]) == 2

    async def test_missing_file(self, config_dir: str, tmp_path: Any) -> None:
        assert await app.async_main(["-c", config_dir, "spectrum", "--file", str(tmp_path / "none.g6")]) == 2

    async def test_unsupported_classification(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "classify", "--family", "path", "3"]) == 2

    async def test_unsupported_catalog(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "catalog", "--n", "3", "--k", "0"]) == 2

    async def test_config_error(self, tmp_path: Any) -> None:
        (tmp_path / "config.yaml").write_text(yaml.dump({"jobs": 0}))
        assert await app.async_main(["-c", str(tmp_path), "families"]) == 2

    async def test_zero_jobs_flag(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "verify", "--n", "4", "--jobs", "0", "--no-cache"]) == 2

    async def test_limit_exceeded(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "verify", "--n", "10", "--no-cache"]) == 3

    async def test_order_nine_without_flag(self, config_dir: str) -> None:
        assert await app.async_main(["-c", config_dir, "verify", "--n", "9", "--no-cache"]) == 2

    async def test_catalog_mismatch(self, config_dir: str, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
        wrong = CatalogEntry(FamilyId.PATH, (4,), path_graph(4), ExactSpectrum.from_values(4, [4, 2, 2, 0]), "test", "P4?")
        monkeypatch.setattr("lapmult.mixins.commands.catalog", lambda n, k: [wrong])

        assert await app.async_main(["-c", config_dir, "-q", "catalog", "--n", "4", "--k", "1"]) == 1
        assert any(line.startswith("FAIL: 1 predicted spectra differ") for line in printed(capsys))

    async def test_verification_failure(self, config_dir: str, monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
        bogus = LemmaViolation("join-spectrum", "@+@", "forced")
        monkeypatch.setattr("lapmult.mixins.verify.join_spectrum_violations", lambda n, enumerator: [bogus])

        assert await app.async_main(["-c", config_dir, "-q", "verify", "--n", "4", "--no-cache"]) == 1
        assert "FAIL: 1 lemma violation(s)" in printed(capsys)

    async def test_unhandled_exception(self, config_dir: str, monkeypatch: pytest.MonkeyPatch) -> None:
        async def explode(self: Any) -> int:
            raise RuntimeError("boom")

        monkeypatch.setattr(LapMult, "run_command", explode)
        assert await app.async_main(["-c", config_dir, "families"]) == 1


# ===========================================================================
# TestMain
# ===========================================================================
class TestMain:
    def test_main_runs_event_loop(self, config_dir: str) -> None:
        assert app.main(["-c", config_dir, "-q", "families"]) == 0

    def test_parallel_verify(self, config_dir: str, capsys: pytest.CaptureFixture[str]) -> None:
        assert app.main(["-c", config_dir, "-q", "verify", "--n", "5", "--jobs", "2", "--no-cache"]) == 0
        assert "ok" in printed(capsys)
