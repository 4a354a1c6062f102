"""
Counting nowhere-zero flows and tensions
========================================

Walks through the triangle: the forest matrix, the four counters, their
polynomials and the Tutte cross-check.
"""

# %%
import numpy as np

from flowtension import Graph, polynomial_of, spanning_forest
from flowtension.counting import count
from flowtension.counting import count_proper_colorings, modular_polys_from_tutte, tutte_polynomial

g = Graph.from_edges([(1, 2), (2, 3), (3, 1)])
F = spanning_forest(g)
print("forest edges", F.forest_edges, "non-forest", F.non_forest_edges)
print("C =\n", F.matrix_C)

# %%
# every non-forest assignment extends to a circulation
f = F.flow_vector([2])
print("flow", f, "A f =", g.incidence_matrix() @ f)

# %%
for kind in ("modular_flow", "modular_tension", "integral_flow", "integral_tension"):
    print(f"{kind:18s}", [count(g, kind, k) for k in range(1, 6)], " ->", polynomial_of(g, kind))

# %%
# the modular polynomials also fall out of the Tutte polynomial
T = tutte_polynomial(g)
mflow, mtension, chromatic = modular_polys_from_tutte(g)
print("T =", T)
print("mFlow =", mflow, "  mTension =", mtension, "  chromatic =", chromatic)
print("colorings k=1..5:", [count_proper_colorings(g, k) for k in range(1, 6)])
