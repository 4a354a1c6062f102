"""f-, h- and h*-vectors of polynomials relative to a fixed degree d.

    h*:  p(k) = sum_{i=0}^{d}   h*_i C(k+d-i, d)
    h:   p(k) = C(k+d, d) + sum_{i=1}^{d+1} h_i C(k+d-i, d),   h_0 = 1
    f:   p(k) = sum_{i=0}^{d}   f_i C(k-1, i)

Each transform evaluates p at consecutive integers and solves the
resulting triangular system by forward substitution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .poly import ExactPolynomial, binomial_poly, binomial_value, evaluate

KINDS = ("f", "h", "hstar")


@dataclass(frozen=True)
class CoeffVector:
    kind: str
    entries: tuple
    d: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown vector kind {self.kind!r}")
        if self.d < 0:
            raise ValueError("reference degree must be nonnegative")
        object.__setattr__(self, "entries", tuple(Fraction(x) for x in self.entries))
        want = self.d + 2 if self.kind == "h" else self.d + 1
        if len(self.entries) != want:
            raise ValueError(f"{self.kind}-vector with d={self.d} needs {want} entries, got {len(self.entries)}")

    def __getitem__(self, i):
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def as_ints(self) -> tuple[int, ...]:
        if any(x.denominator != 1 for x in self.entries):
            raise ValueError(f"non-integral entries in {self}")
        return tuple(int(x) for x in self.entries)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "d": self.d,
            "entries": [f"{x.numerator}/{x.denominator}" for x in self.entries],
        }

    @classmethod
    def from_json(cls, data: dict) -> "CoeffVector":
        return cls(data["kind"], tuple(Fraction(s) for s in data["entries"]), int(data["d"]))


def _check_degree(p: ExactPolynomial, d: int):
    if d < 0:
        raise ValueError("reference degree must be nonnegative")
    if p.degree > d:
        raise ValueError(f"polynomial of degree {p.degree} exceeds reference degree {d}")


def hstar_vector(p: ExactPolynomial, d: int) -> CoeffVector:
    _check_degree(p, d)
    h = []
    for j in range(d + 1):
        acc = evaluate(p, j)
        for i in range(j):
            acc -= h[i] * comb(j + d - i, d)
        h.append(acc)  # diagonal entry C(d, d) = 1
    return CoeffVector("hstar", tuple(h), d)


def h_vector(p: ExactPolynomial, d: int) -> CoeffVector:
    _check_degree(p, d)
    h = [Fraction(0)] * (d + 2)
    h[0] = Fraction(1)
    # at k = 0 only the i = 0 and i = d+1 basis polynomials are nonzero
    h[d + 1] = (evaluate(p, 0) - 1) / binomial_value(-1, d)
    for j in range(1, d + 1):
        acc = evaluate(p, j) - comb(j + d, d)
        for i in range(1, j):
            acc -= h[i] * comb(j + d - i, d)
        # C(j-1, d) vanishes for 1 <= j <= d, so the i = d+1 term drops out
        h[j] = acc
    return CoeffVector("h", tuple(h), d)


def f_vector(p: ExactPolynomial, d: int) -> CoeffVector:
    _check_degree(p, d)
    f = []
    for j in range(d + 1):
        acc = evaluate(p, j + 1)
        for i in range(j):
            acc -= f[i] * comb(j, i)
        f.append(acc)
    return CoeffVector("f", tuple(f), d)


def vector_to_poly(v: CoeffVector) -> ExactPolynomial:
    d = v.d
    out = ExactPolynomial.zero()
    if v.kind == "hstar":
        for i, x in enumerate(v.entries):
            out = out + binomial_poly(d - i, d) * x
    elif v.kind == "h":
        if v.entries[0] != 1:
            raise ValueError("h-vector must start with 1")
        for i, x in enumerate(v.entries):
            out = out + binomial_poly(d - i, d) * x
    else:
        for i, x in enumerate(v.entries):
            out = out + binomial_poly(-1, i) * x
    return out


def hstar_from_h(h: CoeffVector) -> tuple[Fraction, ...]:
    """h*_i = h_i + (-1)^(d+i) C(d+1, i) h_{d+1}."""
    d = h.d
    return tuple(h[i] + (-1) ** (d + i) * comb(d + 1, i) * h[d + 1] for i in range(d + 1))


def h_from_f(f: CoeffVector) -> tuple[Fraction, ...]:
    """h_i = (-1)^i C(d+1, i) + sum_{j<i} (-1)^(i-j-1) C(d-j, i-j-1) f_j."""
    d = f.d
    out = []
    for i in range(d + 2):
        acc = Fraction((-1) ** i * comb(d + 1, i))
        for j in range(i):
            acc += (-1) ** (i - j - 1) * comb(d - j, i - j - 1) * f[j]
        out.append(acc)
    return tuple(out)


def eulerian(n: int, i: int) -> int:
    """A(n, i) = sum_{j=0}^{i} (-1)^j C(n+1, j) (i-j)^n, with A(n,0) = A(n,n+1) = 0."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= i <= n + 1:
        raise ValueError(f"i={i} out of range 0..{n + 1}")
    return sum((-1) ** j * comb(n + 1, j) * (i - j) ** n for j in range(i + 1))


def macmahon(n: int, i: int) -> int:
    """B(n, i) = sum_{j=1}^{i} (-1)^(i-j) C(n, i-j) (2j-1)^(n-1), with B(n,0) = 0."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= i <= n:
        raise ValueError(f"i={i} out of range 0..{n}")
    return sum((-1) ** (i - j) * comb(n, i - j) * (2 * j - 1) ** (n - 1) for j in range(1, i + 1))


def eulerian_row(n: int) -> list[int]:
    return [eulerian(n, i) for i in range(n + 1)]


def macmahon_row(n: int) -> list[int]:
    return [macmahon(n, i) for i in range(n + 1)]


def series_hstar(values: Sequence, d: int, leading=None) -> list[Fraction]:
    """Coefficients of (1-z)^(d+1) * (c0 + sum_{k>=1} values[k] z^k) up to z^(d+1).

    ``values`` holds p(0), p(1), ..., at least d+2 of them. ``leading`` replaces
    the constant term (1 for the h-vector series). Used as a cross-check oracle.
    """
    seq = [Fraction(x) for x in values[: d + 2]]
    if leading is not None:
        seq[0] = Fraction(leading)
    out = []
    for m in range(d + 2):
        out.append(sum((-1) ** j * comb(d + 1, j) * seq[m - j] for j in range(m + 1)))
    return out
