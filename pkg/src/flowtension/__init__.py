"""Exact flow/tension polynomials, their lattice polytopes and coefficient bounds."""

from .constraints import g_constraints, is_m_vector, is_palindromic, macaulay_pseudopower
from .counting import (
    CountKind,
    count_iop_points,
    count_nz_integral_flows,
    count_nz_integral_tensions,
    count_nz_modular_flows,
    count_nz_modular_tensions,
    modular_polys_from_tutte,
    polynomial_of,
    tutte_polynomial,
)
from .enumeration import EnumerationGuardError
from .families import generate_family
from .graph import Graph, classify, parse_edge_list, spanning_forest
from .poly import ExactPolynomial, combine, evaluate, interpolate, standard_family
from .polytopes import (
    HPolytope,
    Hyperplane,
    contains_points,
    count_lattice_points,
    ehrhart_polynomial,
    flow_polytope,
    iop_arrangement,
    reflexivity_check,
    tension_polytope,
)
from .vectors import CoeffVector, eulerian, f_vector, h_vector, hstar_vector, macmahon, vector_to_poly
from .verify import verify_graph

__version__ = "0.1.0"
