"""
Surveying an externally generated universe
==========================================

For 9 or more vertices the graph universe comes from an external generator
(nauty's geng, or tools/nauty_universe.py) as a graph6 file.  A checkpoint
file records every (graph6, fingerprint) pair so an interrupted run resumes
without recomputing permanents.

    python tools/nauty_universe.py 9 -o nine.g6
    python demos/04_ingest_external_universe.py nine.g6 9
"""

import logging
import sys
import tempfile
from pathlib import Path

from copermanent import read_graph6_stream, run_survey, write_report
from copermanent.enumeration import generate_graph6

logging.basicConfig(level=logging.INFO)

if len(sys.argv) == 3:
    path, order = Path(sys.argv[1]), int(sys.argv[2])
else:
    # Fall back to a small universe written by the in-repo generator.
    path, order = Path(tempfile.mkdtemp()) / "seven.g6", 7
    path.write_text("".join(s + "\n" for s in generate_graph6(order)))

checkpoint = path.with_suffix(".ckpt")
with open(path, "rb") as fh:
    report = run_survey(read_graph6_stream(fh), order, checkpoint=checkpoint)
print(write_report(report, "csv").decode(), end="")

# a second run reads every fingerprint back from the checkpoint
with open(path, "rb") as fh:
    again = run_survey(read_graph6_stream(fh), order, checkpoint=checkpoint)
print("resumed report identical:", write_report(again, "json") == write_report(report, "json"))
