# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations


class LapMultError(Exception):
    """Base class for every error raised by lapmult."""


class ConfigError(LapMultError):
    pass


class Graph6Error(LapMultError, ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class FamilyError(LapMultError, ValueError):
    pass


class UnsupportedError(LapMultError):
    """An operation was asked for something outside its contract."""


class LimitExceeded(LapMultError):
    """Input is larger than an operation's supported bound."""
