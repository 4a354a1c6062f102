import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from flowtension.families import bouquet, complete_graph, cycle_graph, path_graph, star_graph, theta_graph
from flowtension.graph import Graph, parse_edge_list, random_spanning_forest, spanning_forest
from flowtension.poly import ExactPolynomial, evaluate
from flowtension.polytopes import (
    HPolytope,
    Hyperplane,
    affine_dimension,
    contains_points,
    count_iop_points,
    count_lattice_points,
    cross_polytope,
    cube,
    ehrhart_polynomial,
    flow_polytope,
    iop_arrangement,
    lattice_points,
    reflexivity_check,
    signed_unit_vectors,
    tension_polytope,
    unit_cube,
)
from flowtension.constraints import is_palindromic
from flowtension.vectors import hstar_vector

P = ExactPolynomial


def brute_count(poly, k, strict=False):
    """Oracle: plain-Python scan of the box [-kB, kB]^n."""
    B = poly.box_bound * k
    total = 0
    for x in itertools.product(range(-B, B + 1), repeat=poly.dim):
        ok = True
        for a, b in poly.rows:
            s = sum(ai * xi for ai, xi in zip(a, x))
            if s > b * k or (strict and s == b * k):
                ok = False
                break
        total += ok
    return total


def hexagon(k3):
    return tension_polytope(k3, spanning_forest(k3))


def test_hyperplane_needs_normal():
    with pytest.raises(ValueError):
        Hyperplane((0, 0), 1)


def test_flow_polytope_examples(c3):
    F = flow_polytope(c3, spanning_forest(c3))
    assert F.dim == 1
    assert lattice_points(F).tolist() == [[-1], [0], [1]]
    Fb = flow_polytope(bouquet(3), spanning_forest(bouquet(3)))
    assert ehrhart_polynomial(Fb) == ehrhart_polynomial(cube(3))
    tree = star_graph(4)
    Ft = flow_polytope(tree, spanning_forest(tree))
    assert Ft.dim == 0 and ehrhart_polynomial(Ft) == P([1])


def test_tension_polytope_examples(k3):
    T = hexagon(k3)
    assert sorted(map(tuple, lattice_points(T).tolist())) == sorted(
        [(0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)])
    tree = path_graph(4)
    assert ehrhart_polynomial(tension_polytope(tree, spanning_forest(tree))) == P([1, 2]) ** 3
    loop = parse_edge_list("1 2\n2 2")
    assert tension_polytope(loop, spanning_forest(loop)).degenerate == "loop"


def test_iop_arrangement_examples(k3, c3):
    F = spanning_forest(k3)
    assert iop_arrangement(k3, F, "modular_tension") == [Hyperplane((1, 1), 1)]
    assert iop_arrangement(c3, spanning_forest(c3), "integral_flow") == [Hyperplane((1,), 0)]
    tree = path_graph(3)
    assert iop_arrangement(tree, spanning_forest(tree), "modular_tension") == []
    with pytest.raises(ValueError):
        iop_arrangement(k3, F, "volume")


def test_lattice_point_examples(k3):
    T = hexagon(k3)
    assert count_lattice_points(T, 1) == 7
    assert count_lattice_points(T, 2) == 19
    assert count_lattice_points(cross_polytope(2), 1, "interior") == 1
    assert count_lattice_points(T, 0) == 1


def test_iop_count_examples():
    assert count_iop_points(unit_cube(2), [Hyperplane((1, 1), 1)], 4) == 6
    assert count_iop_points(unit_cube(1), [], 5) == 4
    assert count_iop_points(cube(1), [Hyperplane((1,), 0)], 3) == 4


def test_ehrhart_examples(k3):
    assert ehrhart_polynomial(hexagon(k3)) == P([1, 3, 3])
    assert ehrhart_polynomial(cube(2)) == P([1, 4, 4])
    assert [count_lattice_points(cross_polytope(3), k) for k in range(4)] == [1, 7, 25, 63]
    assert ehrhart_polynomial(cross_polytope(3)) == P([1, Fraction(8, 3), 2, Fraction(4, 3)])


def test_reflexivity_examples(k3):
    r = reflexivity_check(hexagon(k3), 3)
    assert r and r.describe() == "verified up to k_max=3"
    assert reflexivity_check(cube(2), 3)
    r = reflexivity_check(unit_cube(2), 2)
    assert not r and r.failing_k == 0
    with pytest.raises(ValueError):
        reflexivity_check(HPolytope(2, (((1, 0), 0), ((-1, 0), 0), ((0, 1), 1), ((0, -1), 1)), 1), 2)


def test_contains_points_examples(k3, k4):
    FK4 = flow_polytope(k4, spanning_forest(k4))
    assert contains_points(FK4, signed_unit_vectors(3))
    assert not contains_points(hexagon(k3), [(1, 1)])
    assert contains_points(hexagon(k3), [])
    with pytest.raises(ValueError):
        contains_points(hexagon(k3), [(1, 0, 0)])


def test_json_roundtrip(k4):
    T = tension_polytope(k4, spanning_forest(k4))
    assert HPolytope.from_json(T.to_json()).rows == T.rows
    assert T.to_json()["box_bound"] == 1


GRAPHS = [
    complete_graph(3), complete_graph(4), cycle_graph(4), theta_graph(1, 2, 2),
    bouquet(2), star_graph(4), parse_edge_list("1 2\n1 2\n2 3\n1 3"),
    parse_edge_list("1 2\n2 3\n3 4\n4 1\n1 3"),
]


def polytopes_of(g, F=None):
    F = F or spanning_forest(g)
    out = []
    if not F.n_cycles == 0 and flow_polytope(g, F).degenerate is None:
        out.append(("F", flow_polytope(g, F)))
    if tension_polytope(g, F).degenerate is None and F.n_forest:
        out.append(("T", tension_polytope(g, F)))
    return out


@pytest.mark.parametrize("g", GRAPHS)
def test_counts_against_plain_scan(g):
    for _, poly in polytopes_of(g):
        for k in range(3):
            assert count_lattice_points(poly, k) == brute_count(poly, k)
        assert count_lattice_points(poly, 2, "interior") == brute_count(poly, 2, strict=True)


@pytest.mark.parametrize("g", GRAPHS)
def test_ehrhart_reciprocity(g):
    for _, poly in polytopes_of(g):
        L = ehrhart_polynomial(poly)
        d = affine_dimension(poly)
        for k in range(1, 5):
            assert count_lattice_points(poly, k, "interior") == (-1) ** d * evaluate(L, -k)


@pytest.mark.parametrize("g", GRAPHS)
def test_forest_invariance_of_ehrhart(g):
    base = {name: ehrhart_polynomial(p) for name, p in polytopes_of(g)}
    for s in range(3):
        F = random_spanning_forest(g, random.Random(s))
        assert {name: ehrhart_polynomial(p) for name, p in polytopes_of(g, F)} == base


@pytest.mark.parametrize("g", GRAPHS)
def test_hibi_on_graph_polytopes(g):
    for _, poly in polytopes_of(g):
        d = affine_dimension(poly)
        hs = hstar_vector(ehrhart_polynomial(poly), d)
        assert is_palindromic(hs.entries) == bool(reflexivity_check(poly, 3))
        assert is_palindromic(hs.entries)


def test_hibi_both_directions_on_non_reflexive():
    interval = HPolytope(1, (((1,), 2), ((-1,), 1)), 2)
    L = ehrhart_polynomial(interval)
    assert L == P([1, 3])
    assert not is_palindromic(hstar_vector(L, 1).entries)
    assert not reflexivity_check(interval, 3)
    # [-1,1]x[-1,2] is not reflexive either
    box = HPolytope(2, (((1, 0), 1), ((-1, 0), 1), ((0, 1), 2), ((0, -1), 1)), 2)
    hs = hstar_vector(ehrhart_polynomial(box), 2)
    assert not is_palindromic(hs.entries) and not reflexivity_check(box, 3)
    for d in range(1, 4):
        for poly in (cube(d), cross_polytope(d)):
            assert is_palindromic(hstar_vector(ehrhart_polynomial(poly), d).entries)
            assert reflexivity_check(poly, 3)


def leq(u, v):
    return all(a <= b for a, b in zip(u, v))


@pytest.mark.parametrize("g", [g for g in GRAPHS if not flow_polytope(g, spanning_forest(g)).degenerate])
def test_stanley_flow_sandwich(g):
    F = spanning_forest(g)
    r = F.n_cycles
    FG = flow_polytope(g, F)
    assert contains_points(FG, signed_unit_vectors(r))
    h = lambda poly: hstar_vector(ehrhart_polynomial(poly), r).entries
    assert leq(h(cross_polytope(r)), h(FG))
    assert leq(h(FG), h(cube(r)))


def test_stanley_tension_subgraph():
    g = complete_graph(4)
    F = spanning_forest(g)
    for drop in F.non_forest_edges:
        keep = [j for j in range(g.n_edges) if j != drop]
        h = Graph(g.vertices, tuple(g.edges[j] for j in keep))
        FH = spanning_forest(h, [keep.index(j) for j in F.forest_edges])
        TG, TH = tension_polytope(g, F), tension_polytope(h, FH)
        assert contains_points(TH, lattice_points(TG).tolist())
        hg = hstar_vector(ehrhart_polynomial(TG), 3).entries
        hh = hstar_vector(ehrhart_polynomial(TH), 3).entries
        assert leq(hg, hh)


def test_self_dual_k4(k4):
    F = spanning_forest(k4)
    assert ehrhart_polynomial(flow_polytope(k4, F)) == ehrhart_polynomial(tension_polytope(k4, F))
