"""
Generating every graph up to isomorphism
========================================

Graphs are grown one vertex at a time and deduplicated by a canonical
graph6 string.
"""

import random

from copermanent import Graph, canonical_form, generate_all
from copermanent.enumeration import generate_graph6

for n in range(8):
    print(n, len(generate_graph6(n)))

# any relabelling of a graph has the same canonical string
rng = random.Random(1)
g = Graph.from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (4, 5), (5, 6), (0, 4)])
print("canonical:", canonical_form(g).canonical_g6)
for _ in range(3):
    perm = list(range(7))
    rng.shuffle(perm)
    print("relabelled ->", canonical_form(g.relabel(perm)).canonical_g6)

# representatives come out sorted by canonical string
for h in generate_all(4):
    print(h, h.edges())
