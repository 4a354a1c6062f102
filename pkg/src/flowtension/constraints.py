"""Macaulay pseudopowers, M-vectors and g-constraints."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Optional, Sequence


def macaulay_representation(h: int, i: int) -> list[int]:
    """Greedy a_i > a_{i-1} > ... > a_j >= j >= 1 with h = sum C(a_m, m).

    Returned as [a_i, a_{i-1}, ..., a_j].
    """
    if h <= 0 or i <= 0:
        raise ValueError("h and i must be positive")
    rest, m, out = h, i, []
    while rest > 0:
        a = m
        while comb(a + 1, m) <= rest:
            a += 1
        out.append(a)
        rest -= comb(a, m)
        m -= 1
    assert sum(comb(a, i - t) for t, a in enumerate(out)) == h
    return out


def macaulay_pseudopower(h: int, i: int) -> int:
    """h^<i> = sum C(a_m + 1, m + 1) over the Macaulay representation of h."""
    rep = macaulay_representation(h, i)
    return sum(comb(a + 1, i - t + 1) for t, a in enumerate(rep))


def _pseudopower_or_zero(h: int, i: int) -> int:
    return 0 if h == 0 else macaulay_pseudopower(h, i)


@dataclass(frozen=True)
class MVectorResult:
    ok: bool
    failing_index: Optional[int] = None
    reason: str = ""

    def __bool__(self):
        return self.ok


def is_m_vector(v: Sequence[int]) -> MVectorResult:
    if len(v) == 0:
        return MVectorResult(False, None, "empty vector")
    for idx, x in enumerate(v):
        if x < 0:
            return MVectorResult(False, idx, f"negative entry {x}")
    if v[0] != 1:
        return MVectorResult(False, 0, f"v_0 = {v[0]} != 1")
    for i in range(1, len(v) - 1):
        bound = _pseudopower_or_zero(v[i], i)
        if v[i + 1] > bound:
            return MVectorResult(False, i, f"v_{i + 1} = {v[i + 1]} > v_{i}^<{i}> = {bound}")
    return MVectorResult(True)


@dataclass(frozen=True)
class GConstraintReport:
    monotone_ok: bool
    symmetry_ok: bool
    m_vector_ok: bool
    first_violation: Optional[tuple[int, str]] = None

    @property
    def ok(self) -> bool:
        return self.monotone_ok and self.symmetry_ok and self.m_vector_ok

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {
            "monotone_ok": self.monotone_ok,
            "symmetry_ok": self.symmetry_ok,
            "m_vector_ok": self.m_vector_ok,
            "first_violation": None if self.first_violation is None else list(self.first_violation),
        }


def g_constraints(v: Sequence) -> GConstraintReport:
    """Check the three g-constraints for (h_0, ..., h_d) with d = len(v) - 1."""
    vals = [Fraction(x) for x in v]
    if not vals:
        return GConstraintReport(False, False, False, (0, "empty vector"))
    for idx, x in enumerate(vals):
        if x.denominator != 1:
            return GConstraintReport(False, False, False, (idx, f"non-integral entry {x}"))
    h = [int(x) for x in vals]
    d = len(h) - 1
    violations = []

    monotone = True
    for i in range(d // 2):
        if h[i] > h[i + 1]:
            monotone = False
            violations.append((i + 1, f"condition 1: h_{i} = {h[i]} > h_{i + 1} = {h[i + 1]}"))
            break

    symmetric = True
    for i in range(d // 2 + 1):
        if h[i] > h[d - i]:
            symmetric = False
            violations.append((i, f"condition 2: h_{i} = {h[i]} > h_{d - i} = {h[d - i]}"))
            break

    half = (d + 1) // 2
    diffs = [h[0]] + [h[i] - h[i - 1] for i in range(1, half + 1)]
    m = is_m_vector(diffs)
    if not m.ok:
        violations.append((m.failing_index if m.failing_index is not None else 0, f"condition 3: {m.reason}"))

    first = min(violations) if violations else None
    return GConstraintReport(monotone, symmetric, m.ok, first)


def is_palindromic(v: Sequence) -> bool:
    n = len(v)
    return all(v[i] == v[n - 1 - i] for i in range(n // 2))
