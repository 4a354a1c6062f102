import random

import numpy as np
import pytest

from flowtension.families import bouquet, complete_graph, cycle_graph, path_graph, theta_graph
from flowtension.graph import (
    EdgeListError,
    Graph,
    classify,
    disjoint_union,
    parse_edge_list,
    random_spanning_forest,
    spanning_forest,
)


def test_parse_triangle():
    g = parse_edge_list("1 2\n2 3\n3 1")
    assert g.vertices == (1, 2, 3)
    assert g.edges == ((1, 2), (2, 3), (3, 1))


def test_parse_loops_and_comments():
    g = parse_edge_list("# bouquet\n1 1\n1 1  # second loop\n\n")
    assert g.vertices == (1,)
    assert g.edges == ((1, 1), (1, 1))


@pytest.mark.parametrize("text, line", [("1", 1), ("1 2\n1 2 3", 2), ("1 2\na b!", 2)])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(EdgeListError) as err:
        parse_edge_list(text)
    assert err.value.lineno == line


def test_parse_named_vertices():
    g = parse_edge_list("a b\nb c\n")
    assert g.vertices == ("a", "b", "c")


def test_classify_examples(k3):
    assert classify(k3).to_json() == {"component_count": 1, "cyclomatic_number": 1, "has_bridge": False, "has_loop": False}
    p = classify(path_graph(3))
    assert (p.component_count, p.cyclomatic_number, p.has_bridge) == (1, 0, True)
    b = classify(bouquet(3))
    assert (b.component_count, b.cyclomatic_number, b.has_loop) == (1, 3, True)


def test_incidence_matrix(k3):
    A = k3.incidence_matrix()
    assert A.tolist() == [[-1, 0, 1], [1, -1, 0], [0, 1, -1]]
    assert not bouquet(2).incidence_matrix().any()


def test_forest_of_triangle(k3):
    F = spanning_forest(k3)
    assert F.forest_edges == (0, 1)
    assert F.non_forest_edges == (2,)
    assert F.matrix_C.tolist() == [[1], [1]]
    # independent check: the assembled flow is a circulation
    assert not (k3.incidence_matrix() @ F.flow_vector([1])).any()


def test_forest_of_path():
    F = spanning_forest(path_graph(3))
    assert F.matrix_C.shape == (2, 0)
    assert F.non_forest_edges == ()


def test_two_triangles_block_diagonal(k3):
    g = disjoint_union(k3, k3)
    F = spanning_forest(g)
    C = F.matrix_C
    assert C.shape == (4, 2)
    assert C[:2, 1].tolist() == [0, 0] and C[2:, 0].tolist() == [0, 0]
    assert set(np.abs(C[:2, 0])) == {1} and set(np.abs(C[2:, 1])) == {1}


def test_loop_sign_vector():
    g = Graph((1, 2), ((1, 2), (2, 1), (2, 2)))
    F = spanning_forest(g)
    assert F.sign_vectors[2] == (0, 0, 1)
    assert F.matrix_C[:, F.non_forest_edges.index(2)].tolist() == [0]


GRAPHS = [
    complete_graph(4),
    complete_graph(5),
    cycle_graph(5),
    theta_graph(1, 2, 3),
    bouquet(2),
    disjoint_union(complete_graph(3), theta_graph(1, 1, 2)),
    parse_edge_list("1 2\n2 1\n2 3\n3 3\n3 4\n4 2\n1 4"),
]


@pytest.mark.parametrize("g", GRAPHS)
def test_forest_invariants(g):
    cls = classify(g)
    for F in [spanning_forest(g)] + [random_spanning_forest(g, random.Random(s)) for s in range(3)]:
        assert F.n_forest == g.n_vertices - cls.component_count
        assert F.n_cycles == cls.cyclomatic_number
        assert set(np.unique(F.matrix_C)) <= {-1, 0, 1}
        A = g.incidence_matrix()
        for col in range(F.n_cycles):
            unit = np.zeros(F.n_cycles, dtype=int)
            unit[col] = 1
            assert not (A @ F.flow_vector(unit)).any()
    # determinism
    assert spanning_forest(g).forest_edges == spanning_forest(g).forest_edges
    assert (spanning_forest(g).matrix_C == spanning_forest(g).matrix_C).all()


@pytest.mark.parametrize("g", GRAPHS)
def test_tension_closure(g):
    F = spanning_forest(g)
    rng = np.random.default_rng(1)
    for _ in range(5):
        t = F.tension_vector(rng.integers(-5, 6, size=F.n_forest))
        for sigma in F.sign_vectors.values():
            assert int(np.dot(sigma, t)) == 0


@pytest.mark.parametrize("g", GRAPHS)
def test_sign_vectors_are_circulations(g):
    F = spanning_forest(g)
    A = g.incidence_matrix()
    for e, sigma in F.sign_vectors.items():
        assert sigma[e] == 1
        assert not (A @ np.array(sigma)).any()
        assert [sigma[j] for j in F.forest_edges] == F.matrix_C[:, F.non_forest_edges.index(e)].tolist()


def test_supplied_forest_is_validated(k3):
    with pytest.raises(ValueError):
        spanning_forest(k3, [0])
    with pytest.raises(ValueError):
        spanning_forest(bouquet(1), [0])
    assert spanning_forest(k3, [1, 2]).forest_edges == (1, 2)


def test_components_and_reversal(k3):
    g = disjoint_union(k3, path_graph(2))
    assert [len(c) for c in g.components()] == [3, 2]
    assert g.reversed_edge(0).edges[0] == (2, 1)
