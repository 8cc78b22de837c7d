# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

import copy
from deepmerge.merger import Merger
import logging
import os
from pathlib import Path
import yaml

from typing import TYPE_CHECKING, Any, Sequence, cast

from lapmult.classify import Predicate
from lapmult.errors import ConfigError, FamilyError
from lapmult.families import family, resolve_family
from lapmult.graph import Graph
from lapmult.graph6 import HEADER, from_graph6

if TYPE_CHECKING:
    from lapmult.interface import LapMultProtocol as LapMult

VERSION_FILE = Path(__file__).resolve().parent.parent / "VERSION"

DEFAULTS: dict[str, Any] = {
    "cache_dir": "~/.cache/lapmult",
    "jobs": os.cpu_count() or 1,
    "predicate": Predicate.MAX.value,
    "tolerance": {"eigen": 1e-8, "interlace": 1e-6},
    "debug": False,
}

MERGER = Merger(
    [(dict, "merge"), (list, "override")],
    ["override"],
    ["override"],
)


class HelpersMixin:
    def read_file(self: LapMult, file_name: str) -> str:
        try:
            with open(file_name, "r", encoding="utf-8") as file:
                return file.read().strip()
        except FileNotFoundError:
            raise FileNotFoundError(f"File not found: {file_name}")

    def _read_version_file(self: LapMult) -> str:
        try:
            with open(VERSION_FILE, "r", encoding="utf-8") as f:
                return f.read().strip()
        except FileNotFoundError:
            return "dev"

    def load_config(self: LapMult, config_arg: Any | None = None) -> dict[str, Any]:
        version = os.getenv("APP_VERSION") or self._read_version_file()
        tier = os.getenv("APP_TIER", "prod")
        if tier == "dev":
            version += ":DEV"

        config_from = "env"
        file_config: dict[str, Any] = {}

        # Determine config file path
        config_path = config_arg or "~/.config/lapmult"
        config_path = os.path.expanduser(config_path)
        config_path = os.path.abspath(config_path)

        if os.path.isdir(config_path):
            config_file = os.path.join(config_path, "config.yaml")
        elif os.path.isfile(config_path):
            config_file = config_path
            config_path = os.path.dirname(config_file)
        else:
            # If it's not a valid path but looks like a filename, handle gracefully
            if config_path.endswith(".yaml"):
                config_file = config_path
            else:
                config_file = os.path.join(config_path, "config.yaml")

        # Try to load from YAML
        if os.path.exists(config_file):
            try:
                with open(config_file, "r", encoding="utf-8") as f:
                    file_config = yaml.safe_load(f) or {}
                config_from = "file"
            except Exception as e:
                logging.warning(f"Failed to load config from {config_file}: {e}")
        else:
            logging.debug(f"Config file not found at {config_file}, falling back to environment vars")

        if not isinstance(file_config, dict):
            raise ConfigError(f"{config_file} must hold a mapping, got {type(file_config).__name__}")

        # env fills what the file leaves out
        env_config: dict[str, Any] = {}
        if os.getenv("LAPMULT_JOBS"):
            env_config["jobs"] = os.getenv("LAPMULT_JOBS")
        if os.getenv("LAPMULT_PREDICATE"):
            env_config["predicate"] = os.getenv("LAPMULT_PREDICATE")
        if os.getenv("DEBUG"):
            env_config["debug"] = os.getenv("DEBUG")

        config = MERGER.merge(copy.deepcopy(DEFAULTS), env_config)
        config = MERGER.merge(config, file_config)

        # the cache location is the one key the environment overrides
        if os.getenv("LAPMULT_CACHE_DIR"):
            config["cache_dir"] = os.getenv("LAPMULT_CACHE_DIR")

        # fmt: off
        try:
            config = {
                "cache_dir":   os.path.expanduser(str(config["cache_dir"])),
                "jobs":        int(config["jobs"]),
                "predicate":   str(config["predicate"]).lower(),
                "tolerance":   {key: float(value) for key, value in cast(dict, config["tolerance"]).items()},
                "debug":       str(config.get("debug")).lower() == "true",
                "config_from": config_from,
                "config_path": config_path,
                "version":     version,
            }
        except (TypeError, ValueError, AttributeError) as err:
            raise ConfigError(f"invalid config value: {err}") from err
        # fmt: on

        # Validate fields
        if config["jobs"] < 1:
            raise ConfigError(f"`jobs` must be at least 1, got {config['jobs']}")
        if config["predicate"] not in {p.value for p in Predicate}:
            raise ConfigError(f"`predicate` must be one of {', '.join(p.value for p in Predicate)}, got {config['predicate']!r}")
        for key in ("eigen", "interlace"):
            if config["tolerance"].get(key, 0) <= 0:
                raise ConfigError(f"`tolerance.{key}` must be positive")

        return config

    # Graph inputs --------------------------------------------------------------------------------

    def parse_family_spec(self: LapMult, tokens: Sequence[str]) -> tuple[str, Graph]:
        if not tokens:
            raise FamilyError("--family needs a family name")
        name, *raw = tokens
        try:
            params = [int(token) for token in raw]
        except ValueError:
            raise FamilyError(f"family parameters must be integers, got {' '.join(raw)}") from None
        family_id = resolve_family(name)
        return f"{family_id}({', '.join(map(str, params))})", family(family_id, params)

    def read_graph6_file(self: LapMult, file_name: str) -> list[tuple[str, Graph]]:
        graphs = []
        for line in self.read_file(file_name).splitlines():
            text = line.strip()
            if not text or (text.startswith(">>") and not text.startswith(HEADER)):
                continue
            if text == HEADER:
                continue
            graphs.append((text, from_graph6(text)))
        return graphs

    def graph_inputs(self: LapMult) -> list[tuple[str, Graph]]:
        args = self.args
        if getattr(args, "graph6", None):
            text = cast(str, getattr(args, "graph6"))
            return [(text, from_graph6(text))]
        if getattr(args, "family", None):
            return [self.parse_family_spec(getattr(args, "family"))]
        if getattr(args, "file", None):
            return self.read_graph6_file(getattr(args, "file"))
        raise FamilyError("one of --graph6, --family or --file is required")
