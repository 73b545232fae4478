"""Exact scalars: rationals, Laurent polynomials in ``t`` and fraction-free determinants.

Rationals are :class:`fractions.Fraction`. :class:`LaurentT` carries the
deformation parameter symbolically; it mixes freely with ``int`` and
``Fraction`` under ``+``, ``-`` and ``*``.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction, "LaurentT"]


def as_rational(x) -> Fraction:
    """Parse ints, Fractions and strings like ``"3/4"`` into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class LaurentT:
    """Sparse Laurent polynomial in a single symbol ``t`` over the rationals.

    Stored as ``{exponent: coefficient}`` with no zero coefficients. Instances
    are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        for k, v in (terms or {}).items():
            v = as_rational(v)
            if v:
                clean[int(k)] = v
        self._terms = clean
        self._hash = None

    @classmethod
    def t(cls, power: int = 1) -> "LaurentT":
        return cls({power: 1})

    @classmethod
    def const(cls, c) -> "LaurentT":
        return cls({0: c})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    @staticmethod
    def _lift(other) -> "LaurentT | None":
        if isinstance(other, LaurentT):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentT({0: other})
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        out = dict(self._terms)
        for k, v in o._terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentT(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentT({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentT()
            return LaurentT({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, LaurentT):
            return NotImplemented
        out: dict[int, Fraction] = {}
        for ka, va in self._terms.items():
            for kb, vb in other._terms.items():
                out[ka + kb] = out.get(ka + kb, 0) + va * vb
        return LaurentT(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = LaurentT({0: 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "LaurentT":
        # Only monomials are units of the Laurent ring.
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"{self} is not invertible in Q[t, 1/t]")
        (k, v), = self._terms.items()
        return LaurentT({-k: 1 / v})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, LaurentT):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __call__(self, t0) -> Fraction:
        return laurent_eval(self, t0)

    def __repr__(self):
        return f"LaurentT({self})"

    def __str__(self):
        return format_scalar(self)


def laurent_mul(a: LaurentT, b: LaurentT) -> LaurentT:
    return a * b


def laurent_eval(a: LaurentT, t0) -> Fraction:
    """Substitute ``t = t0`` exactly; raises ZeroDivisionError for ``t0 = 0`` with negative powers."""
    t0 = as_rational(t0)
    total = Fraction(0)
    for k, v in a.terms.items():
        if k < 0 and t0 == 0:
            raise ZeroDivisionError("t = 0 substituted into a negative power of t")
        total += v * t0 ** k
    return total


def laurent_exponent_range(a: LaurentT) -> tuple[int, int]:
    if a.is_zero():
        raise ValueError("the zero polynomial has no exponent range")
    exps = a.terms.keys()
    return min(exps), max(exps)


def evaluate_at(x, t0) -> Fraction:
    """Evaluate a scalar that may or may not carry symbolic ``t``."""
    if isinstance(x, LaurentT):
        return laurent_eval(x, t0)
    return as_rational(x)


def reciprocal(x):
    """Multiplicative inverse of a unit scalar (nonzero rational or a monomial in t)."""
    if isinstance(x, LaurentT):
        return x.inverse()
    if x == 0:
        raise ZeroDivisionError("reciprocal of zero")
    return 1 / Fraction(x)


def power(x, n: int):
    """``x**n`` for any scalar, allowing negative ``n`` on units."""
    if n >= 0:
        return x ** n
    return reciprocal(x) ** (-n)


def is_zero(x) -> bool:
    return not x


def format_scalar(x) -> str:
    """Canonical text: ``p/q`` for rationals, exponent-sorted ``c*t^k`` terms for LaurentT."""
    if isinstance(x, LaurentT):
        if x.is_zero():
            return "0"
        return " + ".join(f"{c}*t^{k}" for k, c in sorted(x.terms.items()))
    return str(as_rational(x))


def _bareiss_int(rows: list[list[int]]) -> int:
    n = len(rows)
    a = [row[:] for row in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def rat_det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant by Bareiss elimination after clearing row denominators.

    The empty matrix has determinant 1.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    int_rows = []
    for row in m:
        row = [as_rational(v) for v in row]
        d = lcm(*(v.denominator for v in row))
        scale /= d
        int_rows.append([int(v * d) for v in row])
    return _bareiss_int(int_rows) * scale


def cofactor_det(m: Sequence[Sequence]):
    """Laplace expansion along the first row. Works over any commutative ring; exponential cost."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if not m[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def product(values: Iterable, start=1):
    out = start
    for v in values:
        out = out * v
    return out
