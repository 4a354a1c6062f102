"""Per-graph theorem harness producing a serialisable report."""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any, Callable, Iterable

from .constraints import g_constraints, is_palindromic
from .counting import (
    CountKind,
    DegenerateGraphWarning,
    count_proper_colorings,
    modular_polys_from_tutte,
    polynomial_of,
)
from .enumeration import DEFAULT_GUARD, EnumerationGuardError
from .graph import Graph, GraphClassification, classify, spanning_forest
from .poly import ExactPolynomial, evaluate, standard_family
from .polytopes import HPolytope, ehrhart_polynomial, flow_polytope, reflexivity_check, tension_polytope
from .vectors import CoeffVector, eulerian, h_vector, hstar_vector, macmahon

CHECK_NAMES = (
    "bounds_modular_flow",
    "bounds_modular_tension",
    "bounds_integral_flow",
    "bounds_integral_tension",
    "palindromic_flow",
    "palindromic_tension",
    "reflexive_flow",
    "reflexive_tension",
    "tension_sandwich",
    "flow_sandwich",
    "chromatic_identity",
    "tutte_consistency",
)

CONVENTIONS = {
    "g_constraint_degree": "h-vector of (k+1)^d - p and of L_P - L_(P,H) taken with reference degree d-1 / dim(P)-1",
    "tutte_evaluation": "mFlow(k) = (-1)^(|E|-|V|+c) T(0,1-k); mTension(k) = (-1)^(|V|-c) T(1-k,0)",
    "chromatic_factor": "chromatic(k) = k^c mTension(k), checked against brute-force colorings",
    "disconnected_sandwich": "sandwich bounds applied per connected component",
    "reflexivity": "finite check of the dilation condition up to k_max",
}


@dataclass
class CheckResult:
    status: str  # pass | fail | skipped
    details: dict = field(default_factory=dict)

    @classmethod
    def of(cls, ok: bool, **details) -> "CheckResult":
        return cls("pass" if ok else "fail", details)

    @classmethod
    def skipped(cls, reason: str, **details) -> "CheckResult":
        return cls("skipped", {"reason": reason, **details})


@dataclass
class TheoremReport:
    graph_spec: str
    graph: Graph
    classification: GraphClassification
    polynomials: dict
    hstar: dict
    checks: dict
    options: dict = field(default_factory=dict)

    @property
    def failed(self) -> list[str]:
        return [name for name, c in self.checks.items() if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {
            "graph": {"spec": self.graph_spec, "edges": [[u, v] for u, v in self.graph.edges]},
            "classification": self.classification.to_json(),
            "polynomials": {k: (None if p is None else p) for k, p in self.polynomials.items()},
            "hstar": {k: (None if v is None else v) for k, v in self.hstar.items()},
            "checks": {name: {"status": c.status, "details": c.details} for name, c in self.checks.items()},
            "options": self.options,
            "conventions": CONVENTIONS,
        }

    def dumps(self) -> str:
        return json.dumps(jsonable(self.to_json()), indent=2)

    def table(self) -> str:
        lines = [f"graph {self.graph_spec}: |V|={self.graph.n_vertices} |E|={self.graph.n_edges} "
                 f"c={self.classification.component_count} r={self.classification.cyclomatic_number}"]
        for name, p in self.polynomials.items():
            lines.append(f"  {name:10s} {'-' if p is None else p}")
        for name, v in self.hstar.items():
            lines.append(f"  h*({name}) {'-' if v is None else _fmt_vec(v.entries)}")
        for name, c in self.checks.items():
            extra = c.details.get("reason", "") if c.status != "pass" else ""
            lines.append(f"  {name:24s} {c.status}{(' (' + extra + ')') if extra else ''}")
        return "\n".join(lines)


def _fmt_vec(v) -> str:
    return "(" + ", ".join(str(x) for x in v) + ")"


def jsonable(x: Any):
    """Exact values to JSON: integers as decimal strings, rationals as 'num/den'."""
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (ExactPolynomial, CoeffVector, GraphClassification, HPolytope)):
        return jsonable(x.to_json())
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "item"):  # numpy scalar
        return jsonable(x.item())
    return x


class _Lazy:
    """Memoised computations; guard overruns are remembered and re-raised."""

    def __init__(self):
        self._cache: dict = {}

    def get(self, key, fn: Callable):
        if key not in self._cache:
            try:
                self._cache[key] = ("ok", fn())
            except EnumerationGuardError as exc:
                self._cache[key] = ("guard", exc)
        tag, val = self._cache[key]
        if tag == "guard":
            raise val
        return val


def _bounds_check(lower: Iterable, vec: Iterable, upper: Iterable) -> list:
    return [i for i, (lo, x, hi) in enumerate(zip(lower, vec, upper)) if not lo <= x <= hi]


def verify_graph(
    g: Graph,
    k_max: int = 3,
    guard: int | None = DEFAULT_GUARD,
    checks: Iterable[str] | None = None,
    spec: str = "",
) -> TheoremReport:
    wanted = list(CHECK_NAMES) if checks is None else [c for c in CHECK_NAMES if c in set(checks)]
    unknown = set(checks or ()) - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")

    cls = classify(g)
    c, r = cls.component_count, cls.cyclomatic_number
    n_tree = g.n_vertices - c
    forest = spanning_forest(g)
    lazy = _Lazy()

    def poly(kind: CountKind) -> ExactPolynomial:
        def run():
            with warnings.catch_warnings():
                warnings.simplefilter("ignore", DegenerateGraphWarning)
                return polynomial_of(g, kind, forest, guard)
        return lazy.get(kind, run)

    def F() -> HPolytope:
        return lazy.get("F", lambda: flow_polytope(g, forest))

    def T() -> HPolytope:
        return lazy.get("T", lambda: tension_polytope(g, forest))

    def L(which: str) -> ExactPolynomial:
        return lazy.get(("L", which), lambda: ehrhart_polynomial(F() if which == "flow" else T(), guard))

    def hstar(which: str) -> CoeffVector:
        dim = r if which == "flow" else n_tree
        return lazy.get(("h*", which), lambda: hstar_vector(L(which), dim))

    flow_reason = "bridge" if cls.has_bridge else None
    tension_reason = "loop" if cls.has_loop else None

    def modular_bound(kind: CountKind, d: int, reason):
        if reason:
            return CheckResult.skipped(reason)
        if d == 0:
            return CheckResult.skipped("zero-dimensional")
        p = poly(kind)
        q = standard_family("shifted_power", d) - p
        h = h_vector(q, d - 1)
        rep = g_constraints(h.entries)
        return CheckResult.of(rep.ok, d=d, polynomial=p, difference=q, h=h.entries, report=rep.to_json())

    def integral_bound(kind: CountKind, which: str, dim: int, reason):
        if reason:
            return CheckResult.skipped(reason)
        if dim == 0:
            return CheckResult.skipped("zero-dimensional")
        p = poly(kind)
        q = L(which) - p
        h = h_vector(q, dim - 1)
        rep = g_constraints(h.entries)
        return CheckResult.of(rep.ok, dim=dim, ehrhart=L(which), polynomial=p, difference=q,
                              h=h.entries, report=rep.to_json())

    def palindromic(which: str, reason):
        if reason:
            return CheckResult.skipped(reason)
        v = hstar(which)
        return CheckResult.of(is_palindromic(v.entries), hstar=v.entries)

    def reflexive(which: str, reason):
        if reason:
            return CheckResult.skipped(reason)
        P = F() if which == "flow" else T()
        if P.dim == 0:
            return CheckResult.skipped("zero-dimensional")
        res = reflexivity_check(P, k_max, guard)
        return CheckResult.of(res.ok, result=res.describe(), polytope=P.to_json())

    def tension_sandwich():
        if tension_reason:
            return CheckResult.skipped(tension_reason)
        parts = []
        ok = True
        product = ExactPolynomial.constant(1)
        for comp in g.component_subgraphs():
            n = comp.n_vertices
            Lc = ehrhart_polynomial(tension_polytope(comp, spanning_forest(comp)), guard)
            product = product * Lc
            v = hstar_vector(Lc, n - 1)
            lower = [eulerian(n, i + 1) for i in range(n)]
            upper = [macmahon(n, i + 1) for i in range(n)]
            bad = _bounds_check(lower, v.entries, upper)
            ok &= not bad
            parts.append({"n": n, "hstar": v.entries, "lower": lower, "upper": upper,
                          "violations": bad, "lower_tight": list(v.entries) == lower,
                          "upper_tight": list(v.entries) == upper})
        prod_ok = product == L("tension")
        return CheckResult.of(ok and prod_ok, components=parts, product_rule=prod_ok,
                              per_component=c > 1)

    def flow_sandwich():
        if flow_reason:
            return CheckResult.skipped(flow_reason)
        parts = []
        ok = True
        product = ExactPolynomial.constant(1)
        for comp in g.component_subgraphs():
            rc = classify(comp).cyclomatic_number
            Lc = ehrhart_polynomial(flow_polytope(comp, spanning_forest(comp)), guard)
            product = product * Lc
            v = hstar_vector(Lc, rc)
            lower = [comb(rc, i) for i in range(rc + 1)]
            upper = [macmahon(rc + 1, i + 1) for i in range(rc + 1)]
            bad = _bounds_check(lower, v.entries, upper)
            ok &= not bad
            parts.append({"r": rc, "hstar": v.entries, "lower": lower, "upper": upper,
                          "violations": bad, "upper_tight": list(v.entries) == upper})
        prod_ok = product == L("flow")
        return CheckResult.of(ok and prod_ok, components=parts, product_rule=prod_ok,
                              per_component=c > 1)

    def chromatic():
        if g.n_vertices > 6:
            return CheckResult.skipped("size", limit="n <= 6")
        mt = poly(CountKind.MODULAR_TENSION)
        rows = []
        ok = True
        for k in range(1, 5):
            predicted = Fraction(k) ** c * evaluate(mt, k)
            actual = count_proper_colorings(g, k)
            ok &= predicted == actual
            rows.append({"k": k, "k^c*mTension": predicted, "colorings": actual})
        return CheckResult.of(ok, mtension=mt, samples=rows)

    def tutte():
        mflow_t, mtension_t, chrom = modular_polys_from_tutte(g)
        mflow, mtension = poly(CountKind.MODULAR_FLOW), poly(CountKind.MODULAR_TENSION)
        return CheckResult.of(mflow_t == mflow and mtension_t == mtension,
                              tutte_mflow=mflow_t, tutte_mtension=mtension_t, chromatic=chrom)

    runners = {
        "bounds_modular_flow": lambda: modular_bound(CountKind.MODULAR_FLOW, r, flow_reason),
        "bounds_modular_tension": lambda: modular_bound(CountKind.MODULAR_TENSION, n_tree, tension_reason),
        "bounds_integral_flow": lambda: integral_bound(CountKind.INTEGRAL_FLOW, "flow", r, flow_reason),
        "bounds_integral_tension": lambda: integral_bound(CountKind.INTEGRAL_TENSION, "tension", n_tree, tension_reason),
        "palindromic_flow": lambda: palindromic("flow", flow_reason),
        "palindromic_tension": lambda: palindromic("tension", tension_reason),
        "reflexive_flow": lambda: reflexive("flow", flow_reason),
        "reflexive_tension": lambda: reflexive("tension", tension_reason),
        "tension_sandwich": tension_sandwich,
        "flow_sandwich": flow_sandwich,
        "chromatic_identity": chromatic,
        "tutte_consistency": tutte,
    }

    results = {}
    for name in wanted:
        try:
            results[name] = runners[name]()
        except EnumerationGuardError as exc:
            results[name] = CheckResult.skipped("guard", message=str(exc))

    def safe(fn):
        try:
            return fn()
        except EnumerationGuardError:
            return None

    polys = {
        "mflow": safe(lambda: poly(CountKind.MODULAR_FLOW)),
        "mtension": safe(lambda: poly(CountKind.MODULAR_TENSION)),
        "iflow": safe(lambda: poly(CountKind.INTEGRAL_FLOW)),
        "itension": safe(lambda: poly(CountKind.INTEGRAL_TENSION)),
    }
    hst = {"flow": safe(lambda: hstar("flow")), "tension": safe(lambda: hstar("tension"))}
    return TheoremReport(spec or g.to_edge_list().strip().replace("\n", ","), g, cls, polys, hst, results,
                         {"k_max": k_max, "guard": guard})
