"""
Coefficient bounds and g-constraints
====================================

Eulerian / MacMahon rows, h-vectors of differences, and a full theorem report.
"""

# %%
from flowtension import ExactPolynomial, g_constraints, h_vector, polynomial_of, verify_graph
from flowtension.families import complete_graph, generate_family
from flowtension.vectors import eulerian_row, macmahon_row

for n in range(1, 6):
    print(n, eulerian_row(n), macmahon_row(n))

# %%
# (k+1)^d minus the modular tension polynomial of K3
k3 = complete_graph(3)
diff = ExactPolynomial([1, 1]) ** 2 - polynomial_of(k3, "modular_tension")
h = h_vector(diff, 1)
print("difference", diff, "h =", h.as_ints(), g_constraints(h.entries).to_json())

# %%
report = verify_graph(generate_family("theta:1:2:2"), spec="theta:1:2:2")
print(report.table())
