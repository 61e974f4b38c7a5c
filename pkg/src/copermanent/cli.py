"""Command-line interface.

Exit codes: 0 success, 1 usage error, 2 data or decode error, 3 capacity
error (order or arithmetic bound exceeded).  Results go to stdout; progress
and timing go to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .bipoly import evaluate, format_text
from .engine import bivariate_permanent
from .enumeration import canonical_form, generate_graph6, read_graph6_stream
from .errors import CapacityError, DecodeError
from .graphs import from_graph6
from .survey import format_table, run_survey, survey_order, write_report

EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_CAPACITY = 3
CLI_MAX_GENERATE = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _lambda_symbol(stream, ascii_only: bool = False) -> str:
    if ascii_only:
        return "y"
    encoding = getattr(stream, "encoding", None)
    if encoding is None:  # in-memory text streams
        return "λ"
    try:
        "λ".encode(encoding)
    except (UnicodeEncodeError, LookupError):
        return "y"
    return "λ"


def _parse_point(text: str) -> tuple[int, int]:
    try:
        x0, lam0 = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected X,L integers, got {text!r}") from None
    return x0, lam0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="copermanent", description="Bivariate permanent polynomials of graphs.")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", help="polynomial of one graph6 graph")
    p.add_argument("graph6")
    p.add_argument("--eval", type=_parse_point, metavar="X,L")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--ascii", action="store_true", help="render λ as y")

    g = sub.add_parser("gen", help="all graphs of order N, one graph6 per line")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--output", "-o")

    for name, help_text in (("survey", "universe statistics (CSV row or table)"), ("mates", "list copermanent families")):
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--n", type=int, help="survey the in-repo generated universe")
        s.add_argument("--input", help="graph6 file ('-' for stdin)")
        s.add_argument("--order", type=int, help="order of every graph in --input")
        s.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
        s.add_argument("--checkpoint", help="resumable fingerprint log")
        s.add_argument(
            "--dedup", action="store_true",
            help="canonicalize --input graphs and drop isomorphic duplicates",
        )
        if name == "survey":
            s.add_argument("--report", help="write the JSON report here")
            s.add_argument("--csv", action="store_true", help="print the CSV row")
        else:
            s.add_argument("--format", choices=("text", "json"), default="text")
            s.add_argument("--ascii", action="store_true", help="render λ as y")
    return parser


def _cmd_poly(args, out) -> None:
    g = from_graph6(args.graph6)
    p = bivariate_permanent(g)
    value = evaluate(p, *args.eval) if args.eval else None
    if args.format == "json":
        doc = {
            "graph6": args.graph6.strip(),
            "order": p.order,
            "polynomial": format_text(p, lam="y"),
            "coefficients": [list(t) for t in p.nonzero_terms()],
        }
        if args.eval:
            doc["eval"] = {"x": args.eval[0], "y": args.eval[1], "value": value}
        out.write(json.dumps(doc) + "\n")
        return
    out.write(format_text(p, lam=_lambda_symbol(out, args.ascii)) + "\n")
    if value is not None:
        out.write(f"{value}\n")


def _cmd_gen(args, out) -> None:
    if not 0 <= args.n <= CLI_MAX_GENERATE:
        raise CapacityError(
            f"gen supports 0 <= N <= {CLI_MAX_GENERATE}; generate larger universes with an "
            "external tool (e.g. nauty geng) and run 'survey --input FILE --order N'"
        )
    lines = generate_graph6(args.n)
    text = "".join(s + "\n" for s in lines)
    if args.output:
        with open(args.output, "w", encoding="ascii") as fh:
            fh.write(text)
    else:
        out.write(text)
    print(f"{len(lines)} graphs of order {args.n}", file=sys.stderr)


def _dedup(graphs):
    seen = set()
    for g in graphs:
        c = canonical_form(g)
        if c.canonical_g6 not in seen:
            seen.add(c.canonical_g6)
            yield c.graph


def _survey(args):
    if (args.n is None) == (args.input is None):
        raise UsageError("give exactly one of --n or --input")
    if args.n is not None:
        if args.order is not None:
            raise UsageError("--order only applies to --input")
        if not 0 <= args.n <= CLI_MAX_GENERATE:
            raise CapacityError(
                f"--n supports 0..{CLI_MAX_GENERATE}; use --input with an external universe"
            )
        return survey_order(args.n, worker_count=args.jobs, checkpoint=args.checkpoint)
    if args.order is None:
        raise UsageError("--input requires --order")
    fh = sys.stdin if args.input == "-" else open(args.input, "rb")
    try:
        graphs = iter(read_graph6_stream(fh))
        if args.dedup:
            graphs = _dedup(graphs)
        return run_survey(graphs, args.order, worker_count=args.jobs, checkpoint=args.checkpoint)
    finally:
        if fh is not sys.stdin:
            fh.close()


def _cmd_survey(args, out) -> None:
    report = _survey(args)
    if args.report:
        with open(args.report, "wb") as fh:
            fh.write(write_report(report, "json"))
    if args.csv:
        out.write(write_report(report, "csv").decode("ascii"))
    else:
        out.write(format_table([report]))


def _cmd_mates(args, out) -> None:
    report = _survey(args)
    if args.format == "json":
        doc = json.loads(write_report(report, "json"))
        out.write(json.dumps(doc["families"], indent=2) + "\n")
        return
    if not report.families:
        out.write("no copermanent families\n")
        return
    lam = _lambda_symbol(out, args.ascii)
    for k, fam in enumerate(report.families, start=1):
        out.write(f"family {k} ({len(fam.members)} graphs): {' '.join(fam.members)}\n")
        out.write(f"  P = {format_text(fam.polynomial, lam=lam)}\n")


COMMANDS = {"poly": _cmd_poly, "gen": _cmd_gen, "survey": _cmd_survey, "mates": _cmd_mates}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )
    try:
        COMMANDS[args.command](args, out)
    except UsageError as exc:
        print(f"copermanent: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"copermanent: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DecodeError, OSError) as exc:
        print(f"copermanent: {exc}", file=sys.stderr)
        return EXIT_DATA
    return 0


if __name__ == "__main__":
    sys.exit(main())
