"""
Copermanent mates on eight vertices
===================================

Survey all 12346 graphs on 8 vertices, group them by polynomial, and show
the two pairs of non-isomorphic graphs that share one.  Takes ~20 s.
"""

from copermanent import format_text, from_graph6, survey_order, write_report
from copermanent.survey import format_table

reports = [survey_order(n) for n in range(9)]
print(format_table(reports))

eight = reports[8]
for family in eight.families:
    print("members:", ", ".join(family.members))
    for s in family.members:
        print("  edges of", s, from_graph6(s).edges())
    print("  P =", format_text(family.polynomial))
    print()

# the JSON report carries every family with its coefficient triples
print(write_report(eight, "json").decode()[:400], "...")
