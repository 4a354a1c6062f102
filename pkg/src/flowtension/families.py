"""Named graph families and the small-graph corpus."""

from __future__ import annotations

import itertools
from pathlib import Path

from .graph import Graph, disjoint_union, parse_edge_list


class FamilySpecError(ValueError):
    pass


def complete_graph(n: int) -> Graph:
    return Graph(tuple(range(1, n + 1)), tuple(itertools.combinations(range(1, n + 1), 2)))


def cycle_graph(n: int) -> Graph:
    if n == 1:
        return Graph((1,), ((1, 1),))
    return Graph(tuple(range(1, n + 1)), tuple((i, i % n + 1) for i in range(1, n + 1)))


def path_graph(n: int) -> Graph:
    return Graph(tuple(range(1, n + 1)), tuple((i, i + 1) for i in range(1, n)))


def star_graph(n: int) -> Graph:
    """Star on n vertices with centre 1."""
    return Graph(tuple(range(1, n + 1)), tuple((1, i) for i in range(2, n + 1)))


def bouquet(r: int) -> Graph:
    return Graph((1,), ((1, 1),) * r)


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Vertices 1 and 2 joined by internally disjoint paths with a, b, c edges, oriented 1 -> 2."""
    vertices = [1, 2]
    edges = []
    nxt = 3
    for length in (a, b, c):
        prev = 1
        for _ in range(length - 1):
            vertices.append(nxt)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 2))
    return Graph(tuple(vertices), tuple(edges))


_FAMILIES = {
    "complete": (complete_graph, 1, 1),
    "cycle": (cycle_graph, 1, 1),
    "path": (path_graph, 1, 1),
    "star": (star_graph, 1, 1),
    "bouquet": (bouquet, 1, 1),
    "theta": (theta_graph, 3, 1),
}


def generate_family(spec: str) -> Graph:
    """Build a graph from ``complete:n``, ``cycle:n``, ``path:n``, ``star:n``,
    ``bouquet:r``, ``theta:a:b:c`` or ``file:PATH``."""
    name, _, rest = spec.partition(":")
    if name == "file":
        if not rest:
            raise FamilySpecError("file: needs a path")
        return parse_edge_list(Path(rest).read_text(encoding="utf-8"))
    if name not in _FAMILIES:
        raise FamilySpecError(f"unknown graph family {name!r}")
    builder, nargs, minimum = _FAMILIES[name]
    parts = rest.split(":") if rest else []
    if len(parts) != nargs:
        raise FamilySpecError(f"{name} takes {nargs} parameter(s), got {len(parts)}")
    try:
        args = [int(p) for p in parts]
    except ValueError:
        raise FamilySpecError(f"non-integer parameter in {spec!r}") from None
    if any(a < minimum for a in args):
        raise FamilySpecError(f"parameters of {name} must be >= {minimum}")
    return builder(*args)


def _canonical(n: int, edges) -> tuple:
    best = None
    for perm in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


def _connected(n: int, edges) -> bool:
    return len(Graph(tuple(range(n)), tuple(edges)).components()) == 1


def simple_connected_graphs(max_vertices: int, max_edges: int, min_vertices: int = 2) -> list[tuple[str, Graph]]:
    """Connected simple graphs up to relabelling, with edges oriented low -> high."""
    out = []
    for n in range(min_vertices, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        seen = set()
        for m in range(n - 1, min(max_edges, len(pairs)) + 1):
            found = []
            for edges in itertools.combinations(pairs, m):
                if not _connected(n, edges):
                    continue
                key = _canonical(n, edges)
                if key in seen:
                    continue
                seen.add(key)
                found.append(key)
            for key in sorted(found):
                g = Graph(tuple(range(1, n + 1)), tuple((u + 1, v + 1) for u, v in key))
                label = "simple:" + ",".join(f"{u}-{v}" for u, v in g.edges)
                out.append((label, g))
    return out


def loopless_multigraphs(max_vertices: int, max_edges: int, max_cyclomatic: int | None = None,
                         min_vertices: int = 2) -> list[tuple[str, Graph]]:
    """Connected loopless multigraphs with at least one parallel pair, up to relabelling."""
    out = []
    for n in range(min_vertices, max_vertices + 1):
        pairs = list(itertools.combinations(range(n), 2))
        perms = list(itertools.permutations(range(n)))
        seen = set()
        for m in range(n, max_edges + 1):
            if max_cyclomatic is not None and m - n + 1 > max_cyclomatic:
                break
            found = []
            for multiset in itertools.combinations_with_replacement(pairs, m):
                if len(set(multiset)) == m or not _connected(n, multiset):
                    continue
                key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in multiset)) for p in perms)
                if key not in seen:
                    seen.add(key)
                    found.append(key)
            for key in sorted(found):
                g = Graph(tuple(range(1, n + 1)), tuple((u + 1, v + 1) for u, v in key))
                out.append(("multi:" + ",".join(f"{u}-{v}" for u, v in g.edges), g))
    return out


NAMED_FAMILIES = (
    "cycle:2", "cycle:3", "cycle:4", "cycle:5",
    "theta:1:1:1", "theta:1:1:2", "theta:1:2:2", "theta:2:2:2", "theta:1:2:3",
    "bouquet:1", "bouquet:2", "bouquet:3",
    "path:2", "path:4", "star:4",
    "complete:4",
)

# loopless and looped multigraphs beyond the named families
EXTRA_MULTIGRAPHS = {
    "multi:K3+double": "1 2\n1 2\n2 3\n1 3\n",
    "multi:K4+double": "1 2\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n",
    "multi:C4+chord-double": "1 2\n2 3\n3 4\n4 1\n1 3\n1 3\n",
    "multi:triangle+loop": "1 2\n2 3\n3 1\n1 1\n",
    "multi:digon+loop": "1 2\n2 1\n2 2\n",
}


def corpus(max_vertices: int = 5, max_edges: int = 8, named: bool = True,
           multigraphs: bool = True, max_cyclomatic: int = 5) -> list[tuple[str, Graph]]:
    """Census of connected simple graphs plus named families and a few multigraphs.

    ``multigraphs`` adds every connected loopless multigraph in range whose
    cyclomatic number is at most ``max_cyclomatic``.
    """
    out = simple_connected_graphs(max_vertices, max_edges)
    if multigraphs:
        out.extend(loopless_multigraphs(max_vertices, max_edges, max_cyclomatic))
    if named:
        for spec in NAMED_FAMILIES:
            g = generate_family(spec)
            if g.n_vertices <= max_vertices and g.n_edges <= max_edges:
                out.append((spec, g))
        for label, text in EXTRA_MULTIGRAPHS.items():
            g = parse_edge_list(text)
            if g.n_vertices <= max_vertices and g.n_edges <= max_edges:
                out.append((label, g))
    return out


def disconnected_corpus(count: int = 10) -> list[tuple[str, Graph]]:
    """Deterministic disjoint unions of small named graphs."""
    pieces = ["cycle:3", "complete:4", "theta:1:1:1", "path:3", "cycle:4", "bouquet:2", "theta:1:2:2", "cycle:2"]
    out = []
    for a, b in itertools.combinations(pieces, 2):
        if len(out) == count:
            break
        out.append((f"{a}+{b}", disjoint_union(generate_family(a), generate_family(b))))
    return out
