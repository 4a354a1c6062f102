"""Exact counts of nowhere-zero flows and tensions, and the Tutte polynomial.

The parameterised counters enumerate the free coordinates (E\\T for flows,
T for tensions) and recover the dependent ones through the forest matrix C.
"""

from __future__ import annotations

import enum
import itertools
import warnings
from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction

import numpy as np

from .enumeration import DEFAULT_GUARD, EnumerationGuardError, count_product
from .graph import Graph, SpanningForestData, classify, spanning_forest
from .poly import ExactPolynomial, evaluate, interpolate
from .polytopes import count_iop_points  # noqa: F401  (re-exported)


class CountKind(str, enum.Enum):
    MODULAR_FLOW = "modular_flow"
    MODULAR_TENSION = "modular_tension"
    INTEGRAL_FLOW = "integral_flow"
    INTEGRAL_TENSION = "integral_tension"

    @property
    def is_flow(self) -> bool:
        return self in (CountKind.MODULAR_FLOW, CountKind.INTEGRAL_FLOW)


class DegenerateGraphWarning(UserWarning):
    """A counting polynomial is identically zero (bridge for flows, loop for tensions)."""


def _check_k(k: int):
    if k < 1:
        raise ValueError("k must be a positive integer")


def _forest(g: Graph, forest: SpanningForestData | None) -> SpanningForestData:
    return spanning_forest(g) if forest is None else forest


def count_nz_modular_flows(g: Graph, k: int, forest: SpanningForestData | None = None,
                           guard: int | None = DEFAULT_GUARD) -> int:
    _check_k(k)
    F = _forest(g, forest)
    Ct = F.matrix_C.T
    values = [np.arange(1, k)] * F.n_cycles

    def accept(X):
        return np.all((X @ Ct) % k != 0, axis=1)

    return count_product(values, accept, guard, "modular flows")


def count_nz_modular_tensions(g: Graph, k: int, forest: SpanningForestData | None = None,
                              guard: int | None = DEFAULT_GUARD) -> int:
    _check_k(k)
    F = _forest(g, forest)
    C = F.matrix_C
    values = [np.arange(1, k)] * F.n_forest

    def accept(X):
        return np.all((-(X @ C)) % k != 0, axis=1)

    return count_product(values, accept, guard, "modular tensions")


def _nonzero_range(k: int) -> np.ndarray:
    return np.array([x for x in range(-k + 1, k) if x != 0], dtype=np.int64)


def count_nz_integral_flows(g: Graph, k: int, forest: SpanningForestData | None = None,
                            guard: int | None = DEFAULT_GUARD) -> int:
    _check_k(k)
    F = _forest(g, forest)
    Ct = F.matrix_C.T
    values = [_nonzero_range(k)] * F.n_cycles

    def accept(X):
        tree = X @ Ct
        return np.all((tree != 0) & (np.abs(tree) <= k - 1), axis=1)

    return count_product(values, accept, guard, "integral flows")


def count_nz_integral_tensions(g: Graph, k: int, forest: SpanningForestData | None = None,
                               guard: int | None = DEFAULT_GUARD) -> int:
    _check_k(k)
    F = _forest(g, forest)
    C = F.matrix_C
    values = [_nonzero_range(k)] * F.n_forest

    def accept(X):
        rest = -(X @ C)
        return np.all((rest != 0) & (np.abs(rest) <= k - 1), axis=1)

    return count_product(values, accept, guard, "integral tensions")


COUNTERS = {
    CountKind.MODULAR_FLOW: count_nz_modular_flows,
    CountKind.MODULAR_TENSION: count_nz_modular_tensions,
    CountKind.INTEGRAL_FLOW: count_nz_integral_flows,
    CountKind.INTEGRAL_TENSION: count_nz_integral_tensions,
}


def count(g: Graph, kind, k: int, forest: SpanningForestData | None = None,
          guard: int | None = DEFAULT_GUARD) -> int:
    return COUNTERS[CountKind(kind)](g, k, forest, guard)


def degeneracy(g: Graph, kind) -> str | None:
    """``"bridge"`` / ``"loop"`` when the polynomial of this kind vanishes identically."""
    cls = classify(g)
    if CountKind(kind).is_flow:
        return "bridge" if cls.has_bridge else None
    return "loop" if cls.has_loop else None


def polynomial_degree(g: Graph, kind) -> int:
    cls = classify(g)
    if CountKind(kind).is_flow:
        return cls.cyclomatic_number
    return g.n_vertices - cls.component_count


def polynomial_of(g: Graph, kind, forest: SpanningForestData | None = None,
                  guard: int | None = DEFAULT_GUARD) -> ExactPolynomial:
    """Interpolate the counter at k = 1..d+1 and confirm one extra sample at d+2."""
    kind = CountKind(kind)
    reason = degeneracy(g, kind)
    if reason is not None:
        warnings.warn(f"{kind.value} polynomial vanishes: graph has a {reason}", DegenerateGraphWarning, stacklevel=2)
        return ExactPolynomial.zero()
    F = _forest(g, forest)
    d = polynomial_degree(g, kind)
    counter = COUNTERS[kind]
    samples = [(k, counter(g, k, F, guard)) for k in range(1, d + 2)]
    p = interpolate(samples)
    extra = counter(g, d + 2, F, guard)
    if evaluate(p, d + 2) != extra:
        raise ArithmeticError(f"{kind.value}: interpolated polynomial misses the sample at k={d + 2}")
    return p


# --- Tutte polynomial -------------------------------------------------------


@dataclass(frozen=True)
class TuttePolynomial:
    coefficients: dict  # (x-power, y-power) -> int

    def evaluate(self, x, y):
        return sum(c * Fraction(x) ** i * Fraction(y) ** j for (i, j), c in self.coefficients.items())

    def substitute(self, x: ExactPolynomial, y: ExactPolynomial) -> ExactPolynomial:
        out = ExactPolynomial.zero()
        for (i, j), c in sorted(self.coefficients.items()):
            out = out + (x ** i) * (y ** j) * c
        return out

    def __str__(self):
        terms = []
        for (i, j), c in sorted(self.coefficients.items(), reverse=True):
            mono = "*".join(s for s in (
                "" if i == 0 else ("x" if i == 1 else f"x^{i}"),
                "" if j == 0 else ("y" if j == 1 else f"y^{j}"),
            ) if s)
            terms.append(f"{c}*{mono}" if mono and c != 1 else (mono or str(c)))
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {f"{i},{j}": str(c) for (i, j), c in sorted(self.coefficients.items())}


def _add(p: dict, q: dict) -> dict:
    out = dict(p)
    for key, c in q.items():
        out[key] = out.get(key, 0) + c
    return out


def _shift(p: dict, dx: int, dy: int) -> dict:
    return {(i + dx, j + dy): c for (i, j), c in p.items()}


def _relabel(edges) -> tuple:
    names: dict = {}
    out = []
    for u, v in edges:
        u = names.setdefault(u, len(names))
        v = names.setdefault(v, len(names))
        out.append((min(u, v), max(u, v)))
    return tuple(sorted(out))


def _connected(edges, a, b) -> bool:
    adj: dict = {}
    for u, v in edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    seen, stack = {a}, [a]
    while stack:
        x = stack.pop()
        if x == b:
            return True
        for y in adj.get(x, ()):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return False


@lru_cache(maxsize=None)
def _tutte(edges: tuple) -> tuple:
    if not edges:
        return (((0, 0), 1),)
    (u, v), rest = edges[0], edges[1:]
    if u == v:
        return tuple(sorted(_shift(dict(_tutte(_relabel(rest))), 0, 1).items()))
    contracted = _relabel((u if a == v else a, u if b == v else b) for a, b in rest)
    if not _connected(rest, u, v):
        return tuple(sorted(_shift(dict(_tutte(contracted)), 1, 0).items()))
    out = _add(dict(_tutte(_relabel(rest))), dict(_tutte(contracted)))
    return tuple(sorted(out.items()))


def tutte_polynomial(g: Graph, max_edges: int = 16) -> TuttePolynomial:
    """Deletion-contraction: bridge -> x T(G/e), loop -> y T(G-e), else T(G-e) + T(G/e)."""
    if g.n_edges > max_edges:
        raise EnumerationGuardError(f"Tutte recursion on {g.n_edges} edges exceeds the guard of {max_edges}")
    idx = g.vertex_index()
    edges = [(idx[u], idx[v]) for u, v in g.edges]
    return TuttePolynomial(dict(_tutte(_relabel(edges))))


def modular_polys_from_tutte(g: Graph, max_edges: int = 16):
    """(mFlow, mTension, chromatic) from the standard Tutte evaluations.

    mFlow(k) = (-1)^(|E|-|V|+c) T(0, 1-k), mTension(k) = (-1)^(|V|-c) T(1-k, 0),
    chromatic(k) = k^c mTension(k).
    """
    T = tutte_polynomial(g, max_edges)
    cls = classify(g)
    c = cls.component_count
    one_minus_k = ExactPolynomial((1, -1))
    zero = ExactPolynomial.zero()
    mflow = T.substitute(zero, one_minus_k) * ((-1) ** cls.cyclomatic_number)
    mtension = T.substitute(one_minus_k, zero) * ((-1) ** (g.n_vertices - c))
    chromatic = ExactPolynomial.k() ** c * mtension
    return mflow, mtension, chromatic


# --- brute-force oracles ----------------------------------------------------


def brute_force_modular_flows(g: Graph, k: int) -> int:
    """Nowhere-zero vectors in Z_k^E with A f = 0 (mod k), by exhaustion."""
    _check_k(k)
    A = g.incidence_matrix()

    def accept(X):
        return np.all((X @ A.T) % k == 0, axis=1)

    return count_product([np.arange(1, k)] * g.n_edges, accept, DEFAULT_GUARD, "brute-force flows")


def brute_force_modular_tensions(g: Graph, k: int) -> int:
    """Nowhere-zero vectors in Z_k^E orthogonal (mod k) to every fundamental cycle."""
    _check_k(k)
    F = spanning_forest(g)
    M = np.array([F.sign_vectors[e] for e in F.non_forest_edges], dtype=np.int64).reshape(-1, g.n_edges)

    def accept(X):
        return np.all((X @ M.T) % k == 0, axis=1)

    return count_product([np.arange(1, k)] * g.n_edges, accept, DEFAULT_GUARD, "brute-force tensions")


def count_potential_tensions(g: Graph, k: int) -> int:
    """Distinct nowhere-zero tensions A^t p (mod k) over all potentials p in Z_k^V."""
    _check_k(k)
    A = g.incidence_matrix()
    seen = set()
    for p in itertools.product(range(k), repeat=g.n_vertices):
        t = (np.array(p, dtype=np.int64) @ A) % k
        if np.all(t != 0):
            seen.add(tuple(t))
    return len(seen)


def count_proper_colorings(g: Graph, k: int) -> int:
    """Maps V -> {0..k-1} with distinct colors on the ends of every edge (loops forbid all)."""
    idx = g.vertex_index()
    ends = np.array([(idx[u], idx[v]) for u, v in g.edges], dtype=np.int64).reshape(-1, 2)

    def accept(X):
        return np.all(X[:, ends[:, 0]] != X[:, ends[:, 1]], axis=1)

    return count_product([np.arange(k)] * g.n_vertices, accept, DEFAULT_GUARD, "colorings")
