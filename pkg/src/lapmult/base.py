# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

import argparse
import asyncio
import concurrent.futures
import hashlib
from json_logging import get_logger
import logging
import os
from pathlib import Path
import re
import time
from types import TracebackType

from typing import Any, Self, cast

from lapmult.classify import Predicate
from lapmult.enumeration import KNOWN_TOTALS, GraphEnumerator
from lapmult.errors import ConfigError
from lapmult.interface import LapMultProtocol as LapMult

CACHE_VERSION = "v1"
CACHE_HEADER = re.compile(r"^>>lapmult-cache (?P<version>v\d+) n=(?P<n>\d+) count=(?P<count>\d+) sha256=(?P<digest>[0-9a-f]{64})$")


def cache_body(graph6s: tuple[str, ...] | list[str]) -> str:
    return "".join(f"{text}\n" for text in graph6s)


class Base:
    def __init__(self: LapMult, args: argparse.Namespace | None = None, **kwargs: Any) -> None:
        super().__init__(**kwargs)

        self.loop = asyncio.get_running_loop()
        self.started = time.monotonic()

        self.args = args
        self.logger = get_logger(__name__)

        # now load self.config right away
        cfg_arg = getattr(args, "config", None)
        self.config = self.load_config(cfg_arg)

        # down in trenches if we have to
        if self.config.get("debug"):
            self.logger.setLevel(logging.DEBUG)

        jobs = getattr(args, "jobs", None)
        if jobs is None:
            jobs = self.config["jobs"]
        if int(jobs) < 1:
            raise ConfigError(f"`jobs` must be at least 1, got {jobs}")
        self.jobs = int(jobs)

        self.predicate = Predicate(getattr(args, "predicate", None) or self.config["predicate"])
        self.tolerance = self.config["tolerance"]

        if getattr(args, "no_cache", False):
            self.cache_dir = None
        elif getattr(args, "cache", None):
            self.cache_dir = Path(os.path.expanduser(args.cache))  # type: ignore[union-attr]
        else:
            self.cache_dir = Path(self.config["cache_dir"])

        self.enumerator = GraphEnumerator()
        self.pool: concurrent.futures.ProcessPoolExecutor | None = None
        self.running = False

    async def __aenter__(self: Self) -> LapMult:
        super_enter = getattr(super(), "__enter__", None)
        if callable(super_enter):
            super_enter()

        lapmult = cast(Any, self)
        # pool and cache are verify-only
        if getattr(lapmult.args, "command", None) == "verify":
            if lapmult.jobs > 1:
                lapmult.pool = concurrent.futures.ProcessPoolExecutor(max_workers=lapmult.jobs)
            lapmult.restore_state()
        lapmult.running = True

        return cast(LapMult, self)

    async def __aexit__(self: Self, exc_type: BaseException | None, exc_val: BaseException | None, exc_tb: TracebackType) -> None:
        super_exit = getattr(super(), "__exit__", None)
        if callable(super_exit):
            super_exit(exc_type, exc_val, exc_tb)

        lapmult = cast(Any, self)
        lapmult.running = False

        if lapmult.pool is not None:
            lapmult.pool.shutdown(wait=True, cancel_futures=True)
            lapmult.pool = None

        try:
            lapmult.save_state()
        except OSError as err:
            lapmult.logger.warning(f"could not save enumeration cache: {err}")

        lapmult.logger.debug("exiting gracefully")

    def save_state(self: LapMult) -> None:
        if self.cache_dir is None or not self.enumerator.dirty:
            return
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        for n in sorted(self.enumerator.dirty):
            graph6s = self.enumerator.levels[n]
            body = cache_body(graph6s)
            digest = hashlib.sha256(body.encode("ascii")).hexdigest()
            data_file = self.cache_dir / f"order-{n}.g6"
            fd = os.open(str(data_file), os.O_WRONLY | os.O_CREAT | os.O_TRUNC, 0o600)
            os.fchmod(fd, 0o600)
            with os.fdopen(fd, "w", encoding="ascii") as file:
                file.write(f">>lapmult-cache {CACHE_VERSION} n={n} count={len(graph6s)} sha256={digest}\n")
                file.write(body)
            self.logger.info(f"saved {len(graph6s)} graphs of order {n} to {data_file}")
        self.enumerator.dirty.clear()

    def restore_state(self: LapMult) -> None:
        if self.cache_dir is None or not self.cache_dir.is_dir():
            return
        for data_file in sorted(self.cache_dir.glob("order-*.g6")):
            try:
                with open(data_file, "r", encoding="ascii") as file:
                    header, *lines = file.read().splitlines()
                match = CACHE_HEADER.match(header)
                if not match:
                    raise ValueError("unrecognized header")
                if match["version"] != CACHE_VERSION:
                    raise ValueError(f"cache format {match['version']}, expected {CACHE_VERSION}")
                n = int(match["n"])
                if data_file.name != f"order-{n}.g6":
                    raise ValueError(f"header order {n} does not match the file name")
                if int(match["count"]) != len(lines):
                    raise ValueError(f"header promises {match['count']} graphs, found {len(lines)}")
                if KNOWN_TOTALS.get(n, len(lines)) != len(lines):
                    raise ValueError(f"order {n} has {KNOWN_TOTALS[n]} graphs, cache holds {len(lines)}")
                if hashlib.sha256(cache_body(lines).encode("ascii")).hexdigest() != match["digest"]:
                    raise ValueError("digest mismatch")
                self.enumerator.levels[n] = tuple(lines)
                self.logger.info(f"restored {len(lines)} graphs of order {n} from {data_file}")
            except (ValueError, KeyError, TypeError, OSError) as err:
                self.logger.warning(f"could not restore cache from {data_file}: {err}; starting fresh")
