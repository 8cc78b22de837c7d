# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
import argparse
import hashlib
import stat
from unittest.mock import MagicMock

import pytest
import yaml

from lapmult.base import CACHE_VERSION, Base, cache_body
from lapmult.classify import Predicate
from lapmult.core import LapMult
from lapmult.enumeration import GraphEnumerator
from lapmult.errors import ConfigError


def fake_owner(cache_dir, enumerator=None):
    obj = MagicMock()
    obj.cache_dir = cache_dir
    obj.enumerator = enumerator or GraphEnumerator()
    obj.logger = MagicMock()
    return obj


def write_cache(path, n, lines, version=CACHE_VERSION, count=None):
    body = cache_body(lines)
    digest = hashlib.sha256(body.encode("ascii")).hexdigest()
    path.write_text(f">>lapmult-cache {version} n={n} count={len(lines) if count is None else count} sha256={digest}\n{body}")


def warned(obj):
    return " ".join(str(call.args[0]) for call in obj.logger.warning.call_args_list)


class TestSaveState:
    def test_writes_one_file_per_dirty_level(self, tmp_path):
        obj = fake_owner(tmp_path / "cache")
        obj.enumerator.level(4)

        Base.save_state(obj)

        assert sorted(p.name for p in (tmp_path / "cache").iterdir()) == ["order-2.g6", "order-3.g6", "order-4.g6"]
        header, *lines = (tmp_path / "cache" / "order-4.g6").read_text().splitlines()
        assert header.startswith(f">>lapmult-cache {CACHE_VERSION} n=4 count=11 sha256=")
        assert tuple(lines) == obj.enumerator.levels[4]
        assert obj.enumerator.dirty == set()

    def test_cache_file_has_restrictive_permissions(self, tmp_path):
        obj = fake_owner(tmp_path)
        obj.enumerator.level(2)

        Base.save_state(obj)

        assert stat.S_IMODE((tmp_path / "order-2.g6").stat().st_mode) == 0o600

    def test_existing_file_permissions_tightened(self, tmp_path):
        cache_file = tmp_path / "order-2.g6"
        cache_file.write_text("stale")
        cache_file.chmod(0o644)
        obj = fake_owner(tmp_path)
        obj.enumerator.level(2)

        Base.save_state(obj)

        assert stat.S_IMODE(cache_file.stat().st_mode) == 0o600

    def test_nothing_dirty_writes_nothing(self, tmp_path):
        Base.save_state(fake_owner(tmp_path / "cache"))
        assert not (tmp_path / "cache").exists()

    def test_cache_disabled(self, tmp_path):
        obj = fake_owner(None)
        obj.enumerator.level(3)

        Base.save_state(obj)

        assert obj.enumerator.dirty == {2, 3}


class TestRestoreState:
    def test_round_trip(self, tmp_path):
        saver = fake_owner(tmp_path)
        saver.enumerator.level(5)
        Base.save_state(saver)

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert loader.enumerator.levels == saver.enumerator.levels
        assert loader.enumerator.missing(5) == []
        assert loader.enumerator.dirty == set()
        loader.logger.warning.assert_not_called()

    def test_corrupt_digest_starts_fresh(self, tmp_path):
        saver = fake_owner(tmp_path)
        saver.enumerator.level(3)
        Base.save_state(saver)
        path = tmp_path / "order-3.g6"
        path.write_text(path.read_text().replace("B?", "BW"))

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert 3 not in loader.enumerator.levels
        assert 2 in loader.enumerator.levels
        assert "starting fresh" in warned(loader)

    def test_wrong_count_rejected(self, tmp_path):
        write_cache(tmp_path / "order-3.g6", 3, ["B?", "BW"])

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert 3 not in loader.enumerator.levels
        assert "order 3 has 4 graphs" in warned(loader)

    def test_header_count_mismatch_rejected(self, tmp_path):
        write_cache(tmp_path / "order-2.g6", 2, ["A?", "A_"], count=3)

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert 2 not in loader.enumerator.levels

    def test_other_version_rejected(self, tmp_path):
        write_cache(tmp_path / "order-2.g6", 2, ["A?", "A_"], version="v9")

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert 2 not in loader.enumerator.levels
        assert "v9" in warned(loader)

    def test_renamed_file_rejected(self, tmp_path):
        write_cache(tmp_path / "order-4.g6", 2, ["A?", "A_"])

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert loader.enumerator.levels == {1: ("@",)}
        assert "file name" in warned(loader)

    def test_garbage_and_empty_files(self, tmp_path):
        (tmp_path / "order-2.g6").write_text("not a cache\n")
        (tmp_path / "order-3.g6").write_text("")

        loader = fake_owner(tmp_path)
        Base.restore_state(loader)

        assert loader.enumerator.levels == {1: ("@",)}
        assert loader.logger.warning.call_count == 2

    def test_missing_directory_is_quiet(self, tmp_path):
        loader = fake_owner(tmp_path / "nope")
        Base.restore_state(loader)
        loader.logger.warning.assert_not_called()


# ===========================================================================
# Construction and context management
# ===========================================================================


def make_args(tmp_path, **overrides):
    (tmp_path / "config.yaml").write_text(yaml.dump({"jobs": 1, "cache_dir": str(tmp_path / "cache")}))
    values = {"config": str(tmp_path), "command": "families", "quiet": False}
    values.update(overrides)
    return argparse.Namespace(**values)


class TestBaseInit:
    async def test_settings_from_config(self, tmp_path):
        lapmult = LapMult(args=make_args(tmp_path))

        assert lapmult.jobs == 1
        assert lapmult.predicate is Predicate.MAX
        assert lapmult.cache_dir == tmp_path / "cache"
        assert lapmult.tolerance["eigen"] == 1e-8
        assert lapmult.pool is None

    async def test_args_override_config(self, tmp_path):
        lapmult = LapMult(args=make_args(tmp_path, jobs=3, predicate="literal", cache=str(tmp_path / "other")))

        assert lapmult.jobs == 3
        assert lapmult.predicate is Predicate.LITERAL
        assert lapmult.cache_dir == tmp_path / "other"

    async def test_no_cache(self, tmp_path):
        lapmult = LapMult(args=make_args(tmp_path, no_cache=True, cache=str(tmp_path / "other")))
        assert lapmult.cache_dir is None

    async def test_bad_jobs_argument(self, tmp_path):
        with pytest.raises(ConfigError):
            LapMult(args=make_args(tmp_path, jobs=-2))

    async def test_zero_jobs_argument_is_not_replaced(self, tmp_path):
        with pytest.raises(ConfigError, match="got 0"):
            LapMult(args=make_args(tmp_path, jobs=0))


class TestContextManager:
    async def test_restores_and_saves(self, tmp_path):
        saver = fake_owner(tmp_path / "cache")
        saver.enumerator.level(3)
        Base.save_state(saver)

        async with LapMult(args=make_args(tmp_path, command="verify")) as lapmult:
            assert lapmult.running
            assert lapmult.enumerator.missing(3) == []
            lapmult.enumerator.level(4)

        assert not lapmult.running
        assert (tmp_path / "cache" / "order-4.g6").exists()

    async def test_other_commands_skip_the_cache(self, tmp_path):
        saver = fake_owner(tmp_path / "cache")
        saver.enumerator.level(3)
        Base.save_state(saver)

        async with LapMult(args=make_args(tmp_path, command="classify")) as lapmult:
            assert lapmult.enumerator.missing(3) == [2, 3]

    async def test_pool_only_for_verify(self, tmp_path):
        async with LapMult(args=make_args(tmp_path, jobs=2)) as lapmult:
            assert lapmult.pool is None

        async with LapMult(args=make_args(tmp_path, jobs=2, command="verify")) as lapmult:
            assert lapmult.pool is not None
        assert lapmult.pool is None

    async def test_save_failure_is_logged(self, tmp_path):
        blocker = tmp_path / "blocked"
        blocker.write_text("a file where the cache directory should be")

        async with LapMult(args=make_args(tmp_path, cache=str(blocker))) as lapmult:
            lapmult.logger = MagicMock()
            lapmult.enumerator.level(2)

        assert "could not save" in str(lapmult.logger.warning.call_args.args[0])
