# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
import random
from itertools import combinations
from typing import Any, Callable

import pytest

from lapmult.graph import Graph


@pytest.fixture
def sample_lapmult_config(tmp_path: Any) -> dict[str, Any]:
    """Return a minimal valid config dict for lapmult."""
    return {
        "cache_dir": str(tmp_path / "cache"),
        "jobs": 1,
        "predicate": "max",
        "tolerance": {"eigen": 1e-8, "interlace": 1e-6},
        "debug": False,
        "config_from": "test",
        "config_path": str(tmp_path),
        "version": "0.0.0-test",
    }


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20251018)


@pytest.fixture
def random_graph(rng: random.Random) -> Callable[..., Graph]:
    """Factory for G(n, p) graphs drawn from the seeded rng."""

    def make(n: int, p: float = 0.5) -> Graph:
        return Graph.from_edges(n, [pair for pair in combinations(range(n), 2) if rng.random() < p])

    return make
