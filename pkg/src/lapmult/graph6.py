# SPDX-License-Identifier: MIT
# Copyright (c) 2025 Jeff Culverhouse
from __future__ import annotations

from lapmult.errors import Graph6Error, LimitExceeded
from lapmult.graph import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 62

# graph6 stores the upper triangle column by column: (0,1), (0,2), (1,2), (0,3), ...
# six bits per byte, most significant first, each byte offset by 63.


def _body_length(order: int) -> int:
    return (order * (order - 1) // 2 + 5) // 6


def from_graph6(text: str) -> Graph:
    if text.endswith("\n"):
        text = text[:-1]
    start = len(HEADER) if text.startswith(HEADER) else 0

    if len(text) <= start:
        raise Graph6Error("empty graph6 string", start)
    for offset in range(start, len(text)):
        if not 63 <= ord(text[offset]) <= 126:
            raise Graph6Error(f"character {text[offset]!r} outside graph6 range 63..126", offset)

    order = ord(text[start]) - 63
    if order == 63:
        raise Graph6Error(f"long-form graph6 (more than {MAX_ORDER} vertices) is not supported", start)
    if order < 1:
        raise Graph6Error("graph6 order must be at least 1", start)

    body = text[start + 1 :]
    expected = _body_length(order)
    if len(body) != expected:
        offset = start + 1 + min(len(body), expected)
        raise Graph6Error(f"expected {expected} data bytes for n={order}, got {len(body)}", offset)

    rows = [0] * order
    k = 0
    pairs = order * (order - 1) // 2
    for j in range(1, order):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1

    if expected:
        padding = expected * 6 - pairs
        if (ord(body[-1]) - 63) & ((1 << padding) - 1):
            raise Graph6Error("nonzero padding bits", start + expected)

    return Graph(order, tuple(rows))


def to_graph6(g: Graph) -> str:
    if not 1 <= g.order <= MAX_ORDER:
        raise LimitExceeded(f"graph6 short form supports 1..{MAX_ORDER} vertices, got {g.order}")

    bits = [(g.rows[i] >> j) & 1 for j in range(1, g.order) for i in range(j)]
    bits.extend([0] * (-len(bits) % 6))

    out = [chr(g.order + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for bit in bits[k : k + 6]:
            value = value << 1 | bit
        out.append(chr(value + 63))
    return "".join(out)
