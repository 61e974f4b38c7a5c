"""
Bivariate permanent polynomials of small graphs
===============================================

P(G; x, λ) = per(x I + λ A + Ā).  Each permutation of the vertices
contributes x^(fixed points) λ^(moves along edges).
"""

from copermanent import Graph, bivariate_permanent, bivariate_permanent_naive, evaluate, from_graph6
from copermanent.engine import integer_permanent, permanental_matrix

# graph6 strings decode straight into graphs: 'A_' is a single edge
k2 = from_graph6("A_")
print("P(K2) =", bivariate_permanent(k2))

# the path 0-1-2 and the triangle
p3 = Graph.from_edges(3, [(0, 1), (1, 2)])
k3 = Graph.complete(3)
print("P(P3) =", bivariate_permanent(p3))
print("P(K3) =", bivariate_permanent(k3))

# the fast Ryser kernel agrees with brute-force permutation expansion
c6 = Graph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
fast, slow = bivariate_permanent(c6), bivariate_permanent_naive(c6)
print("P(C6) =", fast)
print("matches permutation expansion:", fast == slow)

# evaluating at integers gives the permanent of an integer matrix
for x0, lam0 in [(1, 1), (0, 0), (2, -1)]:
    value = evaluate(fast, x0, lam0)
    direct = integer_permanent(permanental_matrix(c6, x0, lam0))
    print(f"P(C6; {x0}, {lam0}) = {value}  (direct permanent: {direct})")

# coefficients live in a triangular table indexed [x degree][λ degree]
print(fast.as_matrix())

# order 20 is the largest supported (n! must fit in 64 bits)
print("P(K20)(1,1) = 20! :", evaluate(bivariate_permanent(Graph.complete(20)), 1, 1))
