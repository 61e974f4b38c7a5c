"""Canonical labelling, isomorph-free generation and graph6 ingestion.

The canonical form of a graph is the smallest graph6 string obtainable by
relabelling vertices, where the search is restricted to labellings that put
vertices in ascending order of degree.  Because degree is an isomorphism
invariant this still yields equal strings exactly for isomorphic graphs.

The graph6 payload lists the upper triangle column by column, so placing the
vertex for position ``k`` fixes column ``k`` entirely.  The search builds the
labelling one position at a time, keeps only candidates whose new column is
minimal, and abandons a branch as soon as its prefix is worse than the best
complete labelling found so far.  Interchangeable twin vertices are explored
once.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from functools import lru_cache
from typing import IO, Iterable, Iterator

from .errors import DecodeError, OrderTooLarge
from .graphs import Graph, from_graph6, to_graph6

CANONICAL_MAX_ORDER = 10
GENERATE_MAX_ORDER = 9


@dataclass(frozen=True)
class CanonicalGraph:
    graph: Graph
    canonical_g6: str
    labelling: tuple[int, ...] = field(compare=False)
    """``labelling[v]`` is the canonical position of original vertex ``v``."""


def _search(rows, n: int) -> tuple[list[int], list[int]]:
    """Return ``(columns, order)`` of the canonical labelling.

    ``order[k]`` is the vertex placed at position ``k``; ``columns[k]`` packs
    its adjacency to positions ``0..k-1`` with position 0 most significant.
    """
    degrees = [r.bit_count() for r in rows]
    cell_of_pos = sorted(degrees)
    best: list[int] | None = None
    best_perm: list[int] = []
    perm: list[int] = []
    cols: list[int] = []

    def descend(k: int, colvals: dict[int, int]) -> None:
        nonlocal best, best_perm
        if k == n:
            if best is None or cols < best:
                best = cols[:]
                best_perm = perm[:]
            return
        want = cell_of_pos[k]
        low = min(c for v, c in colvals.items() if degrees[v] == want)
        kept: list[int] = []
        for v, c in colvals.items():
            if c != low or degrees[v] != want:
                continue
            rv = rows[v]
            if any(rows[u] & ~(1 << v) == rv & ~(1 << u) for u in kept):
                continue
            kept.append(v)
        for v in kept:
            if best is not None and cols == best[:k] and low > best[k]:
                return
            perm.append(v)
            cols.append(low)
            rv = rows[v]
            descend(k + 1, {w: c << 1 | (rv >> w & 1) for w, c in colvals.items() if w != v})
            perm.pop()
            cols.pop()

    descend(0, {v: 0 for v in range(n)})
    return best or [], best_perm


def _columns_to_graph6(cols: list[int], n: int) -> str:
    value = 0
    for k in range(1, n):
        value = value << k | cols[k]
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    value <<= 6 * need - nbits
    out = [chr(n + 63)]
    for k in range(need - 1, -1, -1):
        out.append(chr((value >> (6 * k) & 63) + 63))
    return "".join(out)


def canonical_form(g: Graph) -> CanonicalGraph:
    n = g.order
    if n > CANONICAL_MAX_ORDER:
        raise OrderTooLarge(f"canonical form limited to order {CANONICAL_MAX_ORDER}, got {n}")
    _, perm = _search(g.adjacency, n)
    labelling = [0] * n
    for pos, v in enumerate(perm):
        labelling[v] = pos
    canon = g.relabel(labelling)
    return CanonicalGraph(canon, to_graph6(canon), tuple(labelling))


def canonical_g6(g: Graph) -> str:
    return canonical_form(g).canonical_g6


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[str, ...]:
    if n == 0:
        return (to_graph6(Graph.empty(0)),)
    seen: set[str] = set()
    top = 1 << (n - 1)
    for s in _level(n - 1):
        base = from_graph6(s).adjacency
        for mask in range(top):
            rows = [r | ((mask >> i & 1) << (n - 1)) for i, r in enumerate(base)]
            rows.append(mask)
            cols, _ = _search(rows, n)
            seen.add(_columns_to_graph6(cols, n))
    return tuple(sorted(seen))


def generate_all(n: int) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class of order ``n``.

    Representatives come out in ascending canonical graph6 order.  Orders up
    to 8 are the supported range; 9 works but takes a long time.
    """
    if not 0 <= n <= GENERATE_MAX_ORDER:
        raise OrderTooLarge(
            f"in-repo generation supports orders 0..{GENERATE_MAX_ORDER}, got {n}; "
            "generate larger universes externally and ingest them as graph6"
        )
    for s in _level(n):
        yield from_graph6(s)


def generate_graph6(n: int) -> list[str]:
    """Canonical graph6 strings of all graphs of order ``n``, sorted."""
    if not 0 <= n <= GENERATE_MAX_ORDER:
        raise OrderTooLarge(f"in-repo generation supports orders 0..{GENERATE_MAX_ORDER}, got {n}")
    return list(_level(n))


class Graph6Reader:
    """Lazily decode a line-oriented graph6 stream.

    With ``skip_errors=True`` malformed lines are counted in ``skipped`` and
    recorded in ``errors`` instead of raising.  Blank lines are ignored.
    """

    def __init__(self, source: IO | Iterable, skip_errors: bool = False):
        self.source = source
        self.skip_errors = skip_errors
        self.skipped = 0
        self.errors: list[DecodeError] = []

    def __iter__(self) -> Iterator[Graph]:
        for lineno, line in enumerate(self.source, start=1):
            if isinstance(line, bytes):
                line = line.decode("ascii", errors="replace")
            line = line.strip()
            if not line:
                continue
            try:
                yield from_graph6(line)
            except (DecodeError, OrderTooLarge) as exc:
                err = type(exc)(str(exc), line=lineno) if isinstance(exc, DecodeError) else exc
                if not self.skip_errors:
                    raise err from None
                self.skipped += 1
                self.errors.append(err)


def read_graph6_stream(source, skip_errors: bool = False) -> Graph6Reader:
    if isinstance(source, str):
        source = io.StringIO(source)
    return Graph6Reader(source, skip_errors=skip_errors)


def read_graph6_file(path, skip_errors: bool = False) -> Iterator[Graph]:
    with open(path, "rb") as fh:
        yield from Graph6Reader(fh, skip_errors=skip_errors)
