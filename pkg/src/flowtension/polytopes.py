"""Lattice polytopes in H-representation, inside-out arrangements and Ehrhart data."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .enumeration import DEFAULT_GUARD, check_guard, count_product, product_chunks
from .graph import Graph, SpanningForestData
from .poly import ExactPolynomial, interpolate, evaluate

FLOW_KINDS = ("modular_flow", "integral_flow")
TENSION_KINDS = ("modular_tension", "integral_tension")


@dataclass(frozen=True)
class Hyperplane:
    """{x : normal . x = offset}."""

    normal: tuple
    offset: int

    def __post_init__(self):
        object.__setattr__(self, "normal", tuple(int(a) for a in self.normal))
        object.__setattr__(self, "offset", int(self.offset))
        if not any(self.normal):
            raise ValueError("hyperplane normal must be nonzero")


@dataclass(frozen=True)
class HPolytope:
    """{x in R^dim : a . x <= b for every (a, b) in rows}, contained in [-B, B]^dim."""

    dim: int
    rows: tuple
    box_bound: int
    degenerate: Optional[str] = None

    def __post_init__(self):
        rows = tuple((tuple(int(x) for x in a), int(b)) for a, b in self.rows)
        for a, _ in rows:
            if len(a) != self.dim:
                raise ValueError("row length does not match dimension")
        object.__setattr__(self, "rows", rows)

    @property
    def A(self) -> np.ndarray:
        return np.array([a for a, _ in self.rows], dtype=np.int64).reshape(len(self.rows), self.dim)

    @property
    def b(self) -> np.ndarray:
        return np.array([b for _, b in self.rows], dtype=np.int64)

    def coordinate_bounds(self, k: int) -> list[tuple[int, int]]:
        """Per-coordinate box for kP, tightened by rows of the form +-e_i."""
        B = self.box_bound * k
        lo, hi = [-B] * self.dim, [B] * self.dim
        for a, b in self.rows:
            nz = [i for i, x in enumerate(a) if x]
            if len(nz) == 1 and abs(a[nz[0]]) == 1:
                i = nz[0]
                if a[i] == 1:
                    hi[i] = min(hi[i], b * k)
                else:
                    lo[i] = max(lo[i], -b * k)
        return list(zip(lo, hi))

    def to_json(self) -> dict:
        return {"dim": self.dim, "rows": [[list(a), b] for a, b in self.rows], "box_bound": self.box_bound}

    @classmethod
    def from_json(cls, data: dict) -> "HPolytope":
        return cls(int(data["dim"]), tuple((tuple(a), b) for a, b in data["rows"]), int(data["box_bound"]))

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _unit_rows(d: int, bound: int = 1) -> list:
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append((tuple(e), bound))
        e[i] = -1
        rows.append((tuple(e), bound))
    return rows


def cube(d: int) -> HPolytope:
    """[-1, 1]^d."""
    return HPolytope(d, tuple(_unit_rows(d)), 1)


def unit_cube(d: int) -> HPolytope:
    """[0, 1]^d."""
    rows = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        rows.append((tuple(e), 1))
        e[i] = -1
        rows.append((tuple(e), 0))
    return HPolytope(d, tuple(rows), 1)


def cross_polytope(d: int) -> HPolytope:
    """sum |x_i| <= 1, one row per sign pattern."""
    rows = [(signs, 1) for signs in itertools.product((1, -1), repeat=d)]
    return HPolytope(d, tuple(rows), 1)


def flow_polytope(g: Graph, forest: SpanningForestData) -> HPolytope:
    C = forest.matrix_C
    r = forest.n_cycles
    rows = []
    degenerate = None
    for a in C:
        if not a.any():
            degenerate = "bridge"
            continue
        rows.append((tuple(a), 1))
        rows.append((tuple(-a), 1))
    rows.extend(_unit_rows(r))
    return HPolytope(r, tuple(rows), 1, degenerate)


def tension_polytope(g: Graph, forest: SpanningForestData) -> HPolytope:
    C = forest.matrix_C
    n = forest.n_forest
    rows = []
    degenerate = None
    for col, e in enumerate(forest.non_forest_edges):
        a = C[:, col]
        if not a.any():
            # a loop, or a zero fundamental path
            degenerate = "loop"
            continue
        rows.append((tuple(a), 1))
        rows.append((tuple(-a), 1))
    rows.extend(_unit_rows(n))
    return HPolytope(n, tuple(rows), 1, degenerate)


def _open_cube_offsets(a) -> range:
    # integers j with a . x = j meeting the open unit cube
    lo = sum(x for x in a if x < 0)
    hi = sum(x for x in a if x > 0)
    return range(lo + 1, hi)


def iop_arrangement(g: Graph, forest: SpanningForestData, kind: str) -> list[Hyperplane]:
    C = forest.matrix_C
    if kind == "modular_flow":
        normals = [tuple(int(x) for x in row) for row in C]
        cands = [(a, j) for a in normals if any(a) for j in _open_cube_offsets(a)]
    elif kind == "modular_tension":
        normals = [tuple(int(-x) for x in C[:, col]) for col in range(C.shape[1])]
        cands = [(a, j) for a in normals if any(a) for j in _open_cube_offsets(a)]
    elif kind in ("integral_flow", "integral_tension"):
        dim = forest.n_cycles if kind == "integral_flow" else forest.n_forest
        cands = []
        for i in range(dim):
            e = [0] * dim
            e[i] = 1
            cands.append((tuple(e), 0))
        if kind == "integral_flow":
            normals = [tuple(int(x) for x in row) for row in C]
        else:
            normals = [tuple(int(x) for x in C[:, col]) for col in range(C.shape[1])]
        cands.extend((a, 0) for a in normals if any(a))
    else:
        raise ValueError(f"unknown count kind {kind!r}")
    seen, out = set(), []
    for a, j in cands:
        key = _normalize(a, j)
        if key not in seen:
            seen.add(key)
            out.append(Hyperplane(*key))
    return out


def _normalize(a, j):
    # identify H_{a,j} with H_{-a,-j}
    first = next(x for x in a if x)
    return (a, j) if first > 0 else (tuple(-x for x in a), -j)


def _box_values(P: HPolytope, k: int) -> list[np.ndarray]:
    return [np.arange(lo, hi + 1, dtype=np.int64) for lo, hi in P.coordinate_bounds(k)]


def _guard_box(P: HPolytope, k: int, guard):
    total = 1
    for lo, hi in P.coordinate_bounds(k):
        total *= max(0, hi - lo + 1)
    check_guard(total, guard, f"box of {k}P")


def count_lattice_points(P: HPolytope, k: int, region: str = "closed", guard: int | None = DEFAULT_GUARD) -> int:
    """Lattice points of kP (``closed``) or of its interior (``interior``)."""
    if k < 0 or (region == "interior" and k < 1):
        raise ValueError("invalid dilation factor")
    if region not in ("closed", "interior"):
        raise ValueError(f"unknown region {region!r}")
    A, b = P.A, P.b * k
    strict = region == "interior"

    def accept(X):
        lhs = X @ A.T
        return np.all(lhs < b, axis=1) if strict else np.all(lhs <= b, axis=1)

    return count_product(_box_values(P, k), accept, guard, f"lattice points of {k}P")


def lattice_points(P: HPolytope, k: int = 1, region: str = "closed", guard: int | None = DEFAULT_GUARD) -> np.ndarray:
    _guard_box(P, k, guard)
    A, b = P.A, P.b * k
    out = []
    for X in product_chunks(_box_values(P, k)):
        lhs = X @ A.T
        mask = np.all(lhs < b, axis=1) if region == "interior" else np.all(lhs <= b, axis=1)
        out.append(X[mask])
    if not out:
        return np.zeros((0, P.dim), dtype=np.int64)
    return np.concatenate(out)


def count_iop_points(P: HPolytope, hyperplanes: Sequence[Hyperplane], k: int, guard: int | None = DEFAULT_GUARD) -> int:
    """Interior lattice points of kP lying on none of the dilated hyperplanes kH."""
    if k < 1:
        raise ValueError("k must be positive")
    if P.box_bound is None or P.box_bound < 0:
        raise ValueError("unbounded polytope")
    A, b = P.A, P.b * k
    if hyperplanes:
        N = np.array([h.normal for h in hyperplanes], dtype=np.int64)
        off = np.array([h.offset for h in hyperplanes], dtype=np.int64) * k
    else:
        N = np.zeros((0, P.dim), dtype=np.int64)
        off = np.zeros(0, dtype=np.int64)

    def accept(X):
        ok = np.all(X @ A.T < b, axis=1)
        if len(off):
            ok &= np.all(X @ N.T != off, axis=1)
        return ok

    return count_product(_box_values(P, k), accept, guard, f"inside-out points of {k}P")


def _rank(rows: np.ndarray) -> int:
    """Exact rank of an integer matrix by fraction-free elimination."""
    M = [[int(x) for x in r] for r in rows]
    rank, ncols = 0, (len(M[0]) if M else 0)
    for c in range(ncols):
        piv = next((i for i in range(rank, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, len(M)):
            if M[i][c]:
                f, p = M[i][c], M[rank][c]
                M[i] = [p * x - f * y for x, y in zip(M[i], M[rank])]
        rank += 1
    return rank


def affine_dimension(P: HPolytope, guard: int | None = DEFAULT_GUARD) -> int:
    """Dimension of the affine hull of P's lattice points; -1 if P has none.

    For a lattice polytope this is the dimension of P.
    """
    pts = lattice_points(P, 1, "closed", guard)
    if len(pts) == 0:
        return -1
    return _rank(pts[1:] - pts[0]) if len(pts) > 1 else 0


def ehrhart_polynomial(P: HPolytope, guard: int | None = DEFAULT_GUARD) -> ExactPolynomial:
    """Interpolate closed counts at k = 0..d and confirm the sample at d + 1."""
    d = affine_dimension(P, guard)
    if d < 0:
        return ExactPolynomial.zero()
    samples = [(k, count_lattice_points(P, k, "closed", guard)) for k in range(d + 1)]
    L = interpolate(samples)
    extra = count_lattice_points(P, d + 1, "closed", guard)
    if evaluate(L, d + 1) != extra:
        raise ArithmeticError(f"Ehrhart interpolation failed the check at k={d + 1}; is P a lattice polytope?")
    return L


@dataclass(frozen=True)
class ReflexivityResult:
    ok: bool
    k_max: int
    failing_k: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return f"verified up to k_max={self.k_max}"
        return f"fails at k={self.failing_k}: {self.reason}"


def _point_mask(P: HPolytope, X: np.ndarray, k: int, strict: bool) -> np.ndarray:
    lhs = X @ P.A.T
    b = P.b * k
    return np.all(lhs < b, axis=1) if strict else np.all(lhs <= b, axis=1)


def reflexivity_check(P: HPolytope, k_max: int = 3, guard: int | None = DEFAULT_GUARD) -> ReflexivityResult:
    """Check int(P) has only the origin and int((k+1)P) = kP on lattice points, 1 <= k <= k_max."""
    if k_max < 1:
        raise ValueError("k_max must be positive")
    if affine_dimension(P, guard) != P.dim:
        raise ValueError("reflexivity needs a full-dimensional polytope")
    interior = lattice_points(P, 1, "interior", guard)
    if len(interior) != 1 or interior[0].any():
        return ReflexivityResult(False, k_max, 0, f"interior lattice points: {interior.tolist()}")
    for k in range(1, k_max + 1):
        _guard_box(P, k + 1, guard)
        for X in product_chunks(_box_values(P, k + 1)):
            inner = _point_mask(P, X, k + 1, strict=True)
            closed = _point_mask(P, X, k, strict=False)
            bad = np.nonzero(inner != closed)[0]
            if len(bad):
                return ReflexivityResult(False, k_max, k, f"point {X[bad[0]].tolist()} distinguishes int({k + 1}P) from {k}P")
    return ReflexivityResult(True, k_max)


def contains_points(P: HPolytope, pts: Sequence[Sequence[int]]) -> bool:
    pts = [tuple(p) for p in pts]
    if not pts:
        return True
    if any(len(p) != P.dim for p in pts):
        raise ValueError("point dimension does not match polytope")
    X = np.array(pts, dtype=np.int64).reshape(len(pts), P.dim)
    return bool(np.all(_point_mask(P, X, 1, strict=False)))


def signed_unit_vectors(d: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(d):
        for s in (1, -1):
            e = [0] * d
            e[i] = s
            out.append(tuple(e))
    return out
