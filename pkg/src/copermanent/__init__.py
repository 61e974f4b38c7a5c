"""Bivariate permanent polynomials of small graphs and copermanent mate search.

``P(G; x, λ) = per(x I + λ A + Ā)`` is computed exactly with a Gray-code
Ryser kernel; :mod:`copermanent.survey` groups whole isomorphism-class
universes by polynomial to find non-isomorphic graphs sharing one.
"""

from .bipoly import BiPoly, Fingerprint, evaluate, fingerprint, format_text, parse_text
from .engine import bivariate_permanent, bivariate_permanent_naive, integer_permanent
from .enumeration import canonical_form, generate_all, read_graph6_stream
from .graphs import Graph, complement, edge_count, from_graph6, to_graph6
from .survey import SurveyReport, run_survey, survey_order, write_report

__all__ = [
    "BiPoly",
    "Fingerprint",
    "Graph",
    "SurveyReport",
    "bivariate_permanent",
    "bivariate_permanent_naive",
    "canonical_form",
    "complement",
    "edge_count",
    "evaluate",
    "fingerprint",
    "format_text",
    "from_graph6",
    "generate_all",
    "integer_permanent",
    "parse_text",
    "read_graph6_stream",
    "run_survey",
    "survey_order",
    "to_graph6",
    "write_report",
]
__version__ = "0.1.0"
