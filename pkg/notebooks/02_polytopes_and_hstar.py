"""
Flow and tension polytopes
==========================

Ehrhart polynomials, h*-vectors and the reflexivity check on a few small graphs.
"""

# %%
from flowtension import ehrhart_polynomial, flow_polytope, hstar_vector, spanning_forest, tension_polytope
from flowtension.families import complete_graph, path_graph
from flowtension.polytopes import affine_dimension, lattice_points, reflexivity_check

k3 = complete_graph(3)
T = tension_polytope(k3, spanning_forest(k3))
print(T.dumps())
print("lattice points of T:", lattice_points(T).tolist())

# %%
L = ehrhart_polynomial(T)
print("L_T(k) =", L, "  h* =", hstar_vector(L, affine_dimension(T)).as_ints())
print("reflexive:", reflexivity_check(T, 3).describe())

# %%
# trees give cubes, complete graphs sit at the other end
for name, g in [("path:4", path_graph(4)), ("complete:4", complete_graph(4))]:
    F = spanning_forest(g)
    P = tension_polytope(g, F)
    L = ehrhart_polynomial(P)
    print(name, "L_T =", L, "h* =", hstar_vector(L, affine_dimension(P)).as_ints())

# %%
# K4 is planar and self-dual, so its flow and tension polytopes share an Ehrhart polynomial
k4 = complete_graph(4)
F = spanning_forest(k4)
print(ehrhart_polynomial(flow_polytope(k4, F)), "|", ehrhart_polynomial(tension_polytope(k4, F)))
