"""Exact univariate polynomials over the rationals."""

from __future__ import annotations

import json
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence


def _as_fraction(c) -> Fraction:
    if isinstance(c, str):
        return Fraction(c)
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    return Fraction(c)


class ExactPolynomial:
    """Polynomial in k with Fraction coefficients, ascending powers.

    Trailing zeros are stripped, so ``coeffs == ()`` is the zero polynomial.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls(())

    @classmethod
    def constant(cls, c) -> "ExactPolynomial":
        return cls((c,))

    @classmethod
    def k(cls) -> "ExactPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, k) -> Fraction:
        return evaluate(self, k)

    def __add__(self, other):
        return combine(self, _coerce(other), "add")

    __radd__ = __add__

    def __sub__(self, other):
        return combine(self, _coerce(other), "subtract")

    def __rsub__(self, other):
        return combine(_coerce(other), self, "subtract")

    def __mul__(self, other):
        return combine(self, _coerce(other), "multiply")

    __rmul__ = __mul__

    def __neg__(self):
        return ExactPolynomial(-c for c in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative exponent")
        out = ExactPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, ExactPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ExactPolynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ExactPolynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("k" if i == 1 else f"k^{i}")
            if mono and abs(c) == 1:
                body = mono
            elif mono:
                body = f"{abs(c)}*{mono}" if c.denominator == 1 else f"({abs(c)})*{mono}"
            else:
                body = str(abs(c))
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "ExactPolynomial":
        return cls(Fraction(s) for s in data)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _coerce(x) -> ExactPolynomial:
    if isinstance(x, ExactPolynomial):
        return x
    return ExactPolynomial.constant(x)


def evaluate(p: ExactPolynomial, k) -> Fraction:
    """Horner evaluation; exact for int or Fraction arguments."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * k + c
    return acc


def combine(p: ExactPolynomial, q: ExactPolynomial, op: str) -> ExactPolynomial:
    a, b = p.coeffs, q.coeffs
    if op in ("add", "subtract"):
        sgn = 1 if op == "add" else -1
        n = max(len(a), len(b))
        return ExactPolynomial(
            (a[i] if i < len(a) else 0) + sgn * (b[i] if i < len(b) else 0) for i in range(n)
        )
    if op == "multiply":
        if not a or not b:
            return ExactPolynomial.zero()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ExactPolynomial(out)
    raise ValueError(f"unknown operation {op!r}")


def interpolate(samples: Sequence[tuple[int, int]]) -> ExactPolynomial:
    """Newton divided differences through the given (k, value) samples."""
    if not samples:
        raise ValueError("need at least one sample")
    xs = [Fraction(k) for k, _ in samples]
    if len(set(xs)) != len(xs):
        raise ValueError("duplicate abscissa in samples")
    coef = [Fraction(v) for _, v in samples]
    n = len(xs)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form
    result = ExactPolynomial.constant(coef[-1])
    for i in range(n - 2, -1, -1):
        result = result * ExactPolynomial((-xs[i], 1)) + coef[i]
    return result


def binomial_poly(shift: int, d: int) -> ExactPolynomial:
    """The polynomial C(k + shift, d) in k, valid for every integer k."""
    out = ExactPolynomial.constant(1)
    for j in range(d):
        out = out * ExactPolynomial((shift - j, 1))
    return out * Fraction(1, factorial(d))


def binomial_value(x: int, d: int) -> Fraction:
    """Generalized binomial coefficient x(x-1)...(x-d+1)/d! for any integer x."""
    if x >= 0:
        return Fraction(comb(x, d))
    # C(x, d) = (-1)^d C(d - x - 1, d) for negative x
    return Fraction((-1) ** d * comb(d - x - 1, d))


def standard_family(name: str, d: int) -> ExactPolynomial:
    """``power`` -> k^d, ``shifted_power`` -> (k+1)^d, ``double_shifted`` -> (2k+1)^d."""
    if d < 0:
        raise ValueError("d must be nonnegative")
    base = {
        "power": ExactPolynomial((0, 1)),
        "shifted_power": ExactPolynomial((1, 1)),
        "double_shifted": ExactPolynomial((1, 2)),
    }.get(name)
    if base is None:
        raise ValueError(f"unknown family {name!r}")
    return base ** d
