"""Exact integer polynomials and rational generating functions.

Everything here is integer arithmetic; rational functions are kept
unreduced and compared by cross-multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NonUnitConstantTerm

__all__ = [
    "IntPolynomial",
    "RationalGF",
    "X",
    "ONE",
    "series_coeffs",
    "rational_equal",
    "v_gf",
    "vstar_gf",
    "t_gf",
    "tipl_numerator",
    "tipl_denominator",
    "TIPL_NUMERATOR_TERMS",
]


class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients (index = exponent)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "IntPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @property
    def degree(self) -> float:
        # -inf for the zero polynomial
        return len(self.coeffs) - 1 if self.coeffs else float("-inf")

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _coerce(self, other) -> "IntPolynomial":
        if isinstance(other, IntPolynomial):
            return other
        if isinstance(other, int):
            return IntPolynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-v for v in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, u in enumerate(self.coeffs):
            if u:
                for j, v in enumerate(other.coeffs):
                    out[i + j] += u * v
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = IntPolynomial([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x: int) -> int:
        acc = 0
        for v in reversed(self.coeffs):
            acc = acc * x + v
        return acc

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def exact_div(self, k: int) -> "IntPolynomial":
        if any(v % k for v in self.coeffs):
            raise ArithmeticError(f"{k} does not divide {self}")
        return IntPolynomial(v // k for v in self.coeffs)

    def __repr__(self) -> str:
        return f"IntPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            v = self.coeffs[k]
            if not v:
                continue
            sign = "-" if v < 0 else "+"
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else f"{mag}*") + ("x" if k == 1 else f"x^{k}")
            terms.append((sign, body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


X = IntPolynomial([0, 1])
ONE = IntPolynomial([1])


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    @classmethod
    def of(cls, value) -> "RationalGF":
        if isinstance(value, RationalGF):
            return value
        if isinstance(value, int):
            value = IntPolynomial([value])
        return cls(value, ONE)

    def __add__(self, other) -> "RationalGF":
        o = RationalGF.of(other)
        return RationalGF(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self) -> "RationalGF":
        return RationalGF(-self.numerator, self.denominator)

    def __sub__(self, other) -> "RationalGF":
        return self + (-RationalGF.of(other))

    def __mul__(self, other) -> "RationalGF":
        o = RationalGF.of(other)
        return RationalGF(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalGF":
        o = RationalGF.of(other)
        return RationalGF(self.numerator * o.denominator, self.denominator * o.numerator)

    def __str__(self) -> str:
        return f"({self.numerator}) / ({self.denominator})"


def rational_equal(f: RationalGF, g: RationalGF) -> bool:
    return f.numerator * g.denominator == g.numerator * f.denominator


def series_coeffs(f: RationalGF, n: int) -> list[int]:
    """Maclaurin coefficients ``c_0 .. c_n`` of ``f``.

    The common integer content of numerator and denominator is divided out
    first; the remaining denominator must have constant term +1 or -1.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    num, den = f.numerator, f.denominator
    g = math.gcd(num.content(), den.content())
    if g > 1:
        num, den = num.exact_div(g), den.exact_div(g)
    c0 = den[0]
    if c0 not in (1, -1):
        raise NonUnitConstantTerm(f"denominator constant term {c0} is not a unit")
    out: list[int] = []
    dd = den.coeffs
    for k in range(n + 1):
        acc = num[k]
        for j in range(1, min(k, len(dd) - 1) + 1):
            acc -= dd[j] * out[k - j]
        out.append(acc * c0)  # c0 is its own inverse
    return out


def v_gf(d: int) -> RationalGF:
    """Area generating function of d-restricted polyominoes."""
    _check_d(d)
    xd1 = X ** (d + 1)
    num = 1 - 2 * X + 2 * X**2 - xd1
    den = (1 - X) * (1 - 2 * X + X**2 - xd1)
    return RationalGF(num, den)


def vstar_gf(d: int) -> RationalGF:
    """The auxiliary series ``(1 - x) / (1 - 2x + x^2 - x^(d+1))``.

    Its n-th coefficient counts the polyominoes of area ``n + 1`` whose
    consecutive initial altitudes (including the first gap) differ by at
    least ``d``.
    """
    _check_d(d)
    return RationalGF(1 - X, 1 - 2 * X + X**2 - X ** (d + 1))


# (coefficient as polynomial in d: (c0, c1, c2) meaning c0 + c1*d + c2*d^2,
#  exponent as (e0, e1) meaning e0 + e1*d)
TIPL_NUMERATOR_TERMS: list[tuple[tuple[int, int, int], tuple[int, int]]] = [
    ((-18, -7, -1), (3, 1)),
    ((26, 20, 4), (4, 1)),
    ((-22, -18, -6), (5, 1)),
    ((8, 4, 4), (6, 1)),
    ((10, 3, -1), (4, 2)),
    ((-6, -4, 2), (5, 2)),
    ((6, 0, 0), (2, 1)),
    ((0, 1, -1), (7, 1)),
    ((-6, 0, 0), (3, 2)),
    ((0, 1, -1), (6, 2)),
    ((2, 0, 0), (4, 3)),
    ((-6, 0, 0), (7, 0)),
    ((22, 0, 0), (6, 0)),
    ((-30, 0, 0), (5, 0)),
    ((20, 0, 0), (4, 0)),
    ((-10, 0, 0), (3, 0)),
    ((6, 0, 0), (2, 0)),
    ((-2, 0, 0), (1, 0)),
]


def tipl_numerator(d: int, terms: Sequence = None) -> IntPolynomial:
    _check_d(d)
    if terms is None:
        terms = TIPL_NUMERATOR_TERMS
    out = [0] * (3 * d + 8)
    for (c0, c1, c2), (e0, e1) in terms:
        out[e0 + e1 * d] += c0 + c1 * d + c2 * d * d
    return IntPolynomial(out)


def tipl_denominator(d: int) -> IntPolynomial:
    _check_d(d)
    xm1 = X - 1
    return 2 * (xm1**3 - xm1 * X ** (d + 1)) ** 3


def t_gf(d: int) -> RationalGF:
    """Generating function of the total internal path length of d-restricted polyominoes."""
    return RationalGF(tipl_numerator(d), tipl_denominator(d))


def _check_d(d: int) -> None:
    if d < 0:
        raise ValueError(f"d must be >= 0, got {d}")
