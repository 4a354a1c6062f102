"""Directed multigraphs, spanning forests and the forest matrix C.

Edges are identified by their index in the canonical (input) order, so
parallel edges and loops stay distinct everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

import numpy as np

Vertex = Hashable

_TOKEN = re.compile(r"^[A-Za-z0-9_.\-]+$")


class EdgeListError(ValueError):
    """Malformed edge-list text."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _vertex_key(v):
    # ints before strings, each in natural order
    return (0, v, "") if isinstance(v, int) else (1, 0, str(v))


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple  # of (tail, head)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple((u, v) for u, v in self.edges))
        if len(self.vertices) < 1:
            raise ValueError("a graph needs at least one vertex")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        vs = set(self.vertices)
        for u, v in self.edges:
            if u not in vs or v not in vs:
                raise ValueError(f"edge ({u}, {v}) references an unknown vertex")

    @classmethod
    def from_edges(cls, edges: Iterable[tuple], vertices: Iterable | None = None) -> "Graph":
        edges = [tuple(e) for e in edges]
        vs = set(vertices) if vertices is not None else set()
        for u, v in edges:
            vs.update((u, v))
        return cls(tuple(sorted(vs, key=_vertex_key)), tuple(edges))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    def incidence_matrix(self) -> np.ndarray:
        """Vertex-edge incidence matrix: +1 at the head, -1 at the tail, zero column for loops."""
        idx = self.vertex_index()
        A = np.zeros((self.n_vertices, self.n_edges), dtype=np.int64)
        for j, (u, v) in enumerate(self.edges):
            if u != v:
                A[idx[u], j] -= 1
                A[idx[v], j] += 1
        return A

    def reversed_edge(self, j: int) -> "Graph":
        edges = list(self.edges)
        u, v = edges[j]
        edges[j] = (v, u)
        return Graph(self.vertices, tuple(edges))

    def components(self) -> list[list]:
        """Vertex lists of the connected components, in vertex order."""
        parent = {v: v for v in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, v in self.edges:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        groups: dict = {}
        for v in self.vertices:
            groups.setdefault(find(v), []).append(v)
        return list(groups.values())

    def component_subgraphs(self) -> list["Graph"]:
        out = []
        for comp in self.components():
            cs = set(comp)
            out.append(Graph(tuple(comp), tuple(e for e in self.edges if e[0] in cs)))
        return out

    def to_edge_list(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges)


def disjoint_union(*graphs: Graph) -> Graph:
    """Disjoint union with vertices relabelled 1..n in order."""
    vertices, edges = [], []
    offset = 0
    for g in graphs:
        idx = g.vertex_index()
        vertices.extend(offset + 1 + i for i in range(g.n_vertices))
        edges.extend((offset + 1 + idx[u], offset + 1 + idx[v]) for u, v in g.edges)
        offset += g.n_vertices
    return Graph(tuple(vertices), tuple(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse whitespace-separated ``tail head`` lines; ``#`` starts a comment."""
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise EdgeListError(lineno, f"expected 'tail head', got {len(tokens)} token(s)")
        pair = []
        for tok in tokens:
            if not _TOKEN.match(tok):
                raise EdgeListError(lineno, f"invalid vertex id {tok!r}")
            pair.append(int(tok) if re.fullmatch(r"-?\d+", tok) else tok)
        edges.append(tuple(pair))
    if not edges:
        raise EdgeListError(0, "no edges")
    return Graph.from_edges(edges)


@dataclass(frozen=True)
class GraphClassification:
    component_count: int
    cyclomatic_number: int
    has_bridge: bool
    has_loop: bool

    def to_json(self) -> dict:
        return {
            "component_count": self.component_count,
            "cyclomatic_number": self.cyclomatic_number,
            "has_bridge": self.has_bridge,
            "has_loop": self.has_loop,
        }


def bridges(g: Graph) -> list[int]:
    """Indices of edges whose removal increases the number of components."""
    c = len(g.components())
    out = []
    for j, (u, v) in enumerate(g.edges):
        if u == v:
            continue
        rest = Graph(g.vertices, g.edges[:j] + g.edges[j + 1:])
        if len(rest.components()) > c:
            out.append(j)
    return out


def classify(g: Graph) -> GraphClassification:
    c = len(g.components())
    return GraphClassification(
        component_count=c,
        cyclomatic_number=g.n_edges - g.n_vertices + c,
        has_bridge=bool(bridges(g)),
        has_loop=any(u == v for u, v in g.edges),
    )


@dataclass(frozen=True)
class SpanningForestData:
    forest_edges: tuple[int, ...]
    non_forest_edges: tuple[int, ...]
    sign_vectors: dict = field(repr=False)  # non-forest edge -> fundamental cycle sign vector over E
    matrix_C: np.ndarray = field(repr=False)  # |T| x |E\T|

    @property
    def n_forest(self) -> int:
        return len(self.forest_edges)

    @property
    def n_cycles(self) -> int:
        return len(self.non_forest_edges)

    def flow_vector(self, free: Sequence[int]) -> np.ndarray:
        """Full edge vector of the integer flow with values ``free`` on E\\T."""
        f = np.zeros(self.n_forest + self.n_cycles, dtype=np.int64)
        free = np.asarray(free, dtype=np.int64)
        f[list(self.non_forest_edges)] = free
        if self.forest_edges:
            f[list(self.forest_edges)] = self.matrix_C @ free
        return f

    def tension_vector(self, free: Sequence[int]) -> np.ndarray:
        """Full edge vector of the integer tension with values ``free`` on T."""
        m = self.n_forest + self.n_cycles
        t = np.zeros(m, dtype=np.int64)
        free = np.asarray(free, dtype=np.int64)
        if self.forest_edges:
            t[list(self.forest_edges)] = free
        if self.non_forest_edges:
            t[list(self.non_forest_edges)] = -self.matrix_C.T @ free
        return t


def _dfs_forest(g: Graph) -> list[int]:
    adj: dict = {v: [] for v in g.vertices}
    for j, (u, v) in enumerate(g.edges):
        if u != v:
            adj[u].append((j, v))
            adj[v].append((j, u))
    seen = set()
    forest = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        stack = [(root, iter(adj[root]))]
        while stack:
            v, it = stack[-1]
            for j, w in it:
                if w not in seen:
                    seen.add(w)
                    forest.append(j)
                    stack.append((w, iter(adj[w])))
                    break
            else:
                stack.pop()
    return sorted(forest)


def _forest_path_signs(g: Graph, forest: Sequence[int], start, end) -> dict[int, int]:
    """Sign vector (as a sparse dict) of the unique forest path from start to end."""
    adj: dict = {v: [] for v in g.vertices}
    for j in forest:
        u, v = g.edges[j]
        adj[u].append((j, v))
        adj[v].append((j, u))
    prev = {start: None}
    queue = [start]
    for x in queue:
        if x == end:
            break
        for j, y in adj[x]:
            if y not in prev:
                prev[y] = (j, x)
                queue.append(y)
    if end not in prev:
        raise ValueError(f"{start} and {end} are not joined by the forest")
    signs = {}
    y = end
    while prev[y] is not None:
        j, x = prev[y]
        # traversing edge j from x to y
        signs[j] = 1 if g.edges[j] == (x, y) else -1
        y = x
    return signs


def spanning_forest(g: Graph, forest: Iterable[int] | None = None) -> SpanningForestData:
    """Build forest data from a DFS forest, or from the given forest edge indices.

    A supplied forest must be cycle-free and maximal; this is checked.
    """
    if forest is None:
        T = _dfs_forest(g)
    else:
        T = sorted(set(forest))
        c = len(g.components())
        sub = Graph(g.vertices, tuple(g.edges[j] for j in T))
        if any(g.edges[j][0] == g.edges[j][1] for j in T):
            raise ValueError("a loop cannot be a forest edge")
        if len(sub.components()) != c or len(T) != g.n_vertices - c:
            raise ValueError("not a maximal spanning forest")
    Tset = set(T)
    N = [j for j in range(g.n_edges) if j not in Tset]
    m = g.n_edges
    C = np.zeros((len(T), len(N)), dtype=np.int64)
    row = {j: i for i, j in enumerate(T)}
    sigma = {}
    for col, e in enumerate(N):
        u, v = g.edges[e]
        # fundamental cycle: e itself, then the forest path from head back to tail
        vec = [0] * m
        vec[e] = 1
        if u != v:
            for j, s in _forest_path_signs(g, T, v, u).items():
                vec[j] = s
                C[row[j], col] = s
        sigma[e] = tuple(vec)
    C.setflags(write=False)
    return SpanningForestData(tuple(T), tuple(N), sigma, C)


def random_spanning_forest(g: Graph, rng) -> SpanningForestData:
    """Kruskal over a random edge permutation; ``rng`` is a ``random.Random``."""
    order = list(range(g.n_edges))
    rng.shuffle(order)
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    T = []
    for j in order:
        u, v = g.edges[j]
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            T.append(j)
    return spanning_forest(g, T)
