# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

import asyncio
import time

from typing import TYPE_CHECKING, Callable, Sequence, TypeVar

from lapmult.enumeration import augment, chunked
from lapmult.errors import UnsupportedError
from lapmult.verification import GraphProfile, build_summary, check_verify_order, join_spectrum_violations, profile_chunk

if TYPE_CHECKING:
    from lapmult.interface import LapMultProtocol as LapMult
    from lapmult.mixins.report import ReportDocument

T = TypeVar("T")
R = TypeVar("R")

# chunks per worker, so one slow chunk doesn't idle the rest of the pool
CHUNKS_PER_JOB = 4


class VerifyMixin:
    async def map_chunks(self: LapMult, fn: Callable[[list[T]], R], chunks: Sequence[list[T]]) -> list[R]:
        if self.pool is None:
            return [fn(chunk) for chunk in chunks]
        tasks = [self.loop.run_in_executor(self.pool, fn, chunk) for chunk in chunks]
        return list(await asyncio.gather(*tasks))

    async def enumerate_level(self: LapMult, n: int) -> tuple[str, ...]:
        for order in self.enumerator.missing(n):
            parents = self.enumerator.levels[order - 1]
            start = time.monotonic()
            children: set[str] = set()
            for part in await self.map_chunks(augment, chunked(parents, self.jobs * CHUNKS_PER_JOB)):
                children |= part
            self.enumerator.store(order, children)
            self.logger.debug(f"order {order} took {time.monotonic() - start:.1f}s with {self.jobs} job(s)")
        return self.enumerator.levels[n]

    async def profile_level(self: LapMult, n: int) -> list[GraphProfile]:
        level = await self.enumerate_level(n)
        parts = await self.map_chunks(profile_chunk, chunked(level, self.jobs * CHUNKS_PER_JOB))
        profiles = [profile for part in parts for profile in part]
        self.logger.info(f"profiled {len(profiles)} graphs of order {n}")
        return profiles

    async def cmd_verify(self: LapMult) -> tuple[ReportDocument, int]:
        n = self.args.n  # type: ignore[union-attr]
        if n == 9 and not getattr(self.args, "stretch_n9", False):
            raise UnsupportedError("order 9 is a stretch run; pass --stretch-n9")
        check_verify_order(n)

        profiles = await self.profile_level(n)
        joins = join_spectrum_violations(n, self.enumerator)
        summary = build_summary(
            n,
            profiles,
            predicate=self.predicate,
            check_dls=not getattr(self.args, "skip_dls", False),
            extra_violations=joins,
            tolerance=self.tolerance["eigen"],
        )

        result = self.summary_payload(summary)
        result["verdict"] = summary.verdict()
        report = self.build_report("verify", {"n": n, "jobs": self.jobs, "predicate": str(self.predicate)}, result)
        return report, 0 if summary.ok else 1
