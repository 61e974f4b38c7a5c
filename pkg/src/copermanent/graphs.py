"""Simple undirected graphs stored as bitset rows, plus the graph6 codec.

A :class:`Graph` keeps one Python ``int`` per vertex; bit ``j`` of row ``i``
is set iff ``{i, j}`` is an edge.  Rows are limited to 64 bits so they map
directly onto the ``uint64`` words used by the permanent kernel.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DecodeError,
    InvalidByte,
    NonzeroPadding,
    OrderTooLarge,
    TruncatedPayload,
)

MAX_ORDER = 62
GRAPH6_HEADER = ">>graph6<<"


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0 .. order-1``."""

    order: int
    adjacency: tuple[int, ...]

    def __post_init__(self):
        n = self.order
        if not 0 <= n <= MAX_ORDER:
            raise OrderTooLarge(f"graph order {n} outside 0..{MAX_ORDER}")
        rows = tuple(int(r) for r in self.adjacency)
        object.__setattr__(self, "adjacency", rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for i, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {i} has bits outside 0..{n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not rows[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency at ({i}, {j})")
                r ^= low

    @classmethod
    def empty(cls, order: int) -> Graph:
        return cls(order, (0,) * order)

    @classmethod
    def complete(cls, order: int) -> Graph:
        full = (1 << order) - 1
        return cls(order, tuple(full ^ (1 << i) for i in range(order)))

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * order
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(order, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        a = np.asarray(matrix)
        n = a.shape[0]
        rows = tuple(
            sum(1 << j for j in range(n) if a[i, j]) for i in range(n)
        )
        return cls(n, rows)

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i] >> j & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for j in range(self.order)
            for i in range(j)
            if self.adjacency[i] >> j & 1
        ]

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adjacency]

    def adjacency_matrix(self) -> np.ndarray:
        n = self.order
        bits = np.arange(n, dtype=np.uint64)
        rows = np.array(self.adjacency, dtype=np.uint64).reshape(n, 1)
        return ((rows >> bits) & np.uint64(1)).astype(np.int64)

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.order
        rows = [0] * n
        for i, row in enumerate(self.adjacency):
            target = 0
            for j in range(n):
                if row >> j & 1:
                    target |= 1 << perm[j]
            rows[perm[i]] = target
        return Graph(n, tuple(rows))

    def __str__(self):
        return to_graph6(self)


def complement(g: Graph) -> Graph:
    full = (1 << g.order) - 1
    return Graph(g.order, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adjacency)))


def edge_count(g: Graph) -> int:
    return sum(row.bit_count() for row in g.adjacency) // 2


def _payload_length(n: int) -> int:
    return (n * (n - 1) // 2 + 5) // 6


def from_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 record.

    An optional ``>>graph6<<`` header and a trailing newline are accepted.
    Only the short form (order at most 62) is supported.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise InvalidByte(f"non-ASCII byte in graph6 record: {exc}") from None
    text = text.rstrip("\r\n")
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    if not text:
        raise TruncatedPayload("empty graph6 record")
    data = [ord(c) - 63 for c in text]
    for pos, v in enumerate(data):
        if not 0 <= v <= 63:
            raise InvalidByte(f"byte {text[pos]!r} at offset {pos} outside 63..126")
    n = data[0]
    if n == 63:
        raise OrderTooLarge("long-form graph6 headers (order > 62) are not supported")
    payload = data[1:]
    need = _payload_length(n)
    if len(payload) < need:
        raise TruncatedPayload(
            f"order {n} needs {need} payload bytes, found {len(payload)}"
        )
    if len(payload) > need:
        raise DecodeError(
            f"order {n} needs {need} payload bytes, found {len(payload)}"
        )

    nbits = n * (n - 1) // 2
    value = 0
    for v in payload:
        value = value << 6 | v
    pad = 6 * need - nbits
    if value & ((1 << pad) - 1):
        raise NonzeroPadding("nonzero padding bits in graph6 payload")
    value >>= pad

    rows = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.order
    rows = g.adjacency
    value = 0
    for j in range(1, n):
        for i in range(j):
            value = value << 1 | (rows[i] >> j & 1)
    need = _payload_length(n)
    value <<= 6 * need - n * (n - 1) // 2
    out = [chr(n + 63)]
    for k in range(need - 1, -1, -1):
        out.append(chr((value >> (6 * k) & 63) + 63))
    return "".join(out)
