"""Group graphs by bivariate permanent polynomial and summarise collisions.

A survey maps every graph of a universe to the fingerprint of its
polynomial, groups graphs whose fingerprints are byte-identical, and reports
the table statistics (graphs, distinct polynomials, graphs with a mate,
fraction with a mate, largest family) together with every family of two or
more copermanent graphs.
"""

from __future__ import annotations

import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import IO, Iterable, Iterator

from .bipoly import BiPoly, Fingerprint, fingerprint, format_text, from_fingerprint
from .engine import bivariate_permanent
from .enumeration import CANONICAL_MAX_ORDER, canonical_g6, generate_all
from .errors import CopermanentError, DecodeError, OrderMismatch
from .graphs import Graph, from_graph6, to_graph6

log = logging.getLogger(__name__)

DEFAULT_BATCH = 512


@dataclass(frozen=True)
class CopermanentFamily:
    fingerprint: Fingerprint
    members: tuple[str, ...]
    polynomial: BiPoly

    def __post_init__(self):
        if len(self.members) < 2:
            raise ValueError("a copermanent family needs at least two members")
        if len(set(self.members)) != len(self.members):
            raise ValueError("family members must be distinct")


@dataclass(frozen=True)
class SurveyReport:
    order: int
    num_graphs: int
    num_polynomials: int
    num_with_mate: int
    fraction_with_mate: str
    max_family: int
    families: tuple[CopermanentFamily, ...] = field(default=())

    def check(self) -> None:
        """Assert the counting identities between the statistics."""
        singletons = self.num_graphs - self.num_with_mate
        assert self.num_with_mate == sum(len(f.members) for f in self.families)
        assert self.num_polynomials == singletons + len(self.families)
        assert self.fraction_with_mate == format_fraction(self.num_with_mate, self.num_graphs)
        if self.families:
            assert self.max_family == max(len(f.members) for f in self.families)


def format_fraction(num: int, den: int, places: int = 6) -> str:
    """``num/den`` to ``places`` decimals, rounding half to even, exactly."""
    if den == 0:
        return f"{0:.{places}f}"
    scale = 10**places
    q, r = divmod(num * scale, den)
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    whole, frac = divmod(q, scale)
    return f"{whole}.{frac:0{places}d}"


def polynomial_fingerprint(g: Graph) -> Fingerprint:
    return fingerprint(bivariate_permanent(g))


def _fingerprint_batch(batch: list[str]) -> list[tuple[str, bytes]]:
    out = []
    for s in batch:
        try:
            out.append((s, polynomial_fingerprint(from_graph6(s)).bytes))
        except CopermanentError as exc:
            raise type(exc)(f"{exc} (graph {s})") from None
    return out


def _batches(items: Iterable[str], size: int) -> Iterator[list[str]]:
    it = iter(items)
    while batch := list(islice(it, size)):
        yield batch


def fingerprint_stream(
    graphs: Iterable[str], worker_count: int = 1, batch_size: int = DEFAULT_BATCH
) -> Iterator[tuple[str, bytes]]:
    """Yield ``(graph6, fingerprint bytes)`` in input order."""
    batches = _batches(graphs, batch_size)
    if worker_count <= 1:
        for batch in batches:
            yield from _fingerprint_batch(batch)
        return
    with ProcessPoolExecutor(max_workers=worker_count) as pool:
        for result in pool.map(_fingerprint_batch, batches):
            yield from result


def _checked_graph6(source: Iterable[Graph], order: int) -> Iterator[str]:
    for g in source:
        if g.order != order:
            raise OrderMismatch(
                f"graph {to_graph6(g)} has order {g.order}, survey order is {order}"
            )
        yield to_graph6(g)


def run_survey(
    source: Iterable[Graph],
    order: int,
    worker_count: int = 1,
    checkpoint: str | os.PathLike | None = None,
    batch_size: int = DEFAULT_BATCH,
) -> SurveyReport:
    """Survey a universe of pairwise non-isomorphic graphs of one order.

    With ``checkpoint`` set, previously recorded ``(graph6, fingerprint)``
    pairs are reused and newly computed ones are appended, so an interrupted
    run can be resumed.
    """
    groups: dict[bytes, list[str]] = {}
    done: set[str] = set()
    if checkpoint is not None and os.path.exists(checkpoint):
        _drop_partial_tail(checkpoint)
        with open(checkpoint, encoding="ascii") as fh:
            for s, fp in read_checkpoint(fh):
                if s in done:
                    continue
                done.add(s)
                groups.setdefault(fp.bytes, []).append(s)
        log.info("resumed %d fingerprints from %s", len(done), checkpoint)

    pending = (s for s in _checked_graph6(source, order) if s not in done)
    sink = open(checkpoint, "a", encoding="ascii") if checkpoint is not None else None
    start = time.perf_counter()
    computed = 0
    try:
        for s, fp in fingerprint_stream(pending, worker_count, batch_size):
            groups.setdefault(fp, []).append(s)
            computed += 1
            if sink is not None:
                sink.write(checkpoint_line(s, fp))
            if computed % 50000 == 0:
                log.info("%d polynomials computed (%.1fs)", computed, time.perf_counter() - start)
    finally:
        if sink is not None:
            sink.close()
    log.info("%d polynomials computed in %.2fs", computed, time.perf_counter() - start)
    return build_report(order, groups)


def _drop_partial_tail(path) -> None:
    """Truncate an unterminated last line left behind by an interrupted run."""
    with open(path, "rb+") as fh:
        data = fh.read()
        if data and not data.endswith(b"\n"):
            fh.truncate(data.rfind(b"\n") + 1)


def build_report(order: int, groups: dict[bytes, list[str]]) -> SurveyReport:
    num_graphs = sum(len(m) for m in groups.values())
    families = []
    for key in sorted(groups):
        members = groups[key]
        if len(members) < 2:
            continue
        if order <= CANONICAL_MAX_ORDER:
            canon = sorted(canonical_g6(from_graph6(s)) for s in members)
        else:
            canon = sorted(members)
        fp = Fingerprint.from_bytes(key)
        families.append(CopermanentFamily(fp, tuple(canon), from_fingerprint(fp)))
    num_with_mate = sum(len(f.members) for f in families)
    if families:
        max_family = max(len(f.members) for f in families)
    else:
        max_family = 1 if num_graphs else 0
    return SurveyReport(
        order=order,
        num_graphs=num_graphs,
        num_polynomials=len(groups),
        num_with_mate=num_with_mate,
        fraction_with_mate=format_fraction(num_with_mate, num_graphs),
        max_family=max_family,
        families=tuple(families),
    )


def survey_order(n: int, worker_count: int = 1, checkpoint=None) -> SurveyReport:
    """Survey every graph of order ``n`` using the in-repo generator."""
    return run_survey(generate_all(n), n, worker_count=worker_count, checkpoint=checkpoint)


# -- serialisation ---------------------------------------------------------

TABLE_HEADER = ("n", "#graphs", "#perm. pols", "# with coperm. mate", "frac. with mate", "max. family")


def table_row(report: SurveyReport) -> tuple:
    return (
        report.order,
        report.num_graphs,
        report.num_polynomials,
        report.num_with_mate,
        report.fraction_with_mate,
        report.max_family,
    )


def report_to_dict(report: SurveyReport) -> dict:
    return {
        "order": report.order,
        "num_graphs": report.num_graphs,
        "num_polynomials": report.num_polynomials,
        "num_with_mate": report.num_with_mate,
        "fraction_with_mate": report.fraction_with_mate,
        "max_family": report.max_family,
        "families": [
            {
                "fingerprint": f.fingerprint.hex(),
                "polynomial": format_text(f.polynomial, lam="y"),
                "coefficients": [list(t) for t in f.polynomial.nonzero_terms()],
                "members": list(f.members),
            }
            for f in report.families
        ],
    }


def report_from_dict(data: dict) -> SurveyReport:
    families = []
    for f in data["families"]:
        fp = Fingerprint.from_hex(f["fingerprint"])
        poly = BiPoly.from_dict(
            data["order"], {(i, j): c for i, j, c in f["coefficients"]}
        )
        if from_fingerprint(fp) != poly:
            raise DecodeError("family coefficients disagree with fingerprint")
        families.append(CopermanentFamily(fp, tuple(f["members"]), poly))
    return SurveyReport(
        order=data["order"],
        num_graphs=data["num_graphs"],
        num_polynomials=data["num_polynomials"],
        num_with_mate=data["num_with_mate"],
        fraction_with_mate=data["fraction_with_mate"],
        max_family=data["max_family"],
        families=tuple(families),
    )


def write_report(report: SurveyReport, format: str = "json") -> bytes:
    if format == "json":
        return (json.dumps(report_to_dict(report), indent=2) + "\n").encode("ascii")
    if format == "csv":
        return (",".join(str(v) for v in table_row(report)) + "\n").encode("ascii")
    if format in ("text", "text-table", "table"):
        return format_table([report]).encode("utf-8")
    raise ValueError(f"unknown report format {format!r}")


def read_report(data: bytes | str) -> SurveyReport:
    return report_from_dict(json.loads(data))


def format_table(reports: Iterable[SurveyReport]) -> str:
    rows = [TABLE_HEADER] + [tuple(str(v) for v in table_row(r)) for r in reports]
    widths = [max(len(r[k]) for r in rows) for k in range(len(TABLE_HEADER))]
    lines = ["  ".join(cell.rjust(w) for cell, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


def checkpoint_line(graph6: str, fp: Fingerprint | bytes) -> str:
    data = fp.bytes if isinstance(fp, Fingerprint) else fp
    return f"{graph6}\t{data.hex()}\n"


def write_checkpoint(pairs: Iterable[tuple[str, Fingerprint | bytes]], sink: IO[str]) -> int:
    count = 0
    for s, fp in pairs:
        sink.write(checkpoint_line(s, fp))
        count += 1
    return count


def read_checkpoint(source: Iterable[str]) -> Iterator[tuple[str, Fingerprint]]:
    for lineno, line in enumerate(source, start=1):
        line = line.rstrip("\r\n")
        if not line:
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise DecodeError("expected 'graph6<TAB>fingerprint'", line=lineno)
        s, hexdata = parts
        try:
            data = bytes.fromhex(hexdata)
            from_fingerprint(data)
        except (ValueError, DecodeError) as exc:
            raise DecodeError(f"bad fingerprint: {exc}", line=lineno) from None
        if hexdata != data.hex():
            raise DecodeError("fingerprint hex must be lowercase", line=lineno)
        yield s, Fingerprint.from_bytes(data)
