"""Truncated formal power series with exact rational coefficients.

A :class:`Series` of order ``N`` knows the coefficients of ``x**0 .. x**N``;
everything above is unknown, so every binary operation returns the smaller
of the two operand orders.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "INFINITE",
    "Series",
    "SeriesError",
    "make",
    "one",
    "x",
    "add",
    "sub",
    "scale",
    "mul",
    "inverse",
    "compose",
    "sqrt",
    "solve_quadratic_fe",
    "shift",
    "pow",
    "valuation",
]

#: Valuation of the zero series.
INFINITE = math.inf

Scalar = Union[int, Fraction]


class SeriesError(ValueError):
    """Raised when a series operation's precondition does not hold."""


def _frac(value: Rational | int) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"exact rational expected, got {type(value).__name__}")


def _scaled_integers(coeffs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return [c.numerator * (den // c.denominator) for c in coeffs], den


class Series:
    """Immutable truncated power series ``sum(coeffs[i] * x**i)`` mod ``x**(order+1)``."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int):
        if order < 0:
            raise SeriesError(f"order must be non-negative, got {order}")
        cs = [_frac(c) for c in coeffs]
        if len(cs) > order + 1:
            raise SeriesError(
                f"{len(cs)} coefficients do not fit in a series of order {order}"
            )
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> Series:
        s = object.__new__(cls)
        s._coeffs = coeffs
        return s

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        return self._coeffs[i]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self._coeffs)
        return f"Series([{body}], order={self.order})"

    def truncate(self, order: int) -> Series:
        if order > self.order:
            raise SeriesError(
                f"cannot extend a series of order {self.order} to {order}"
            )
        if order < 0:
            raise SeriesError(f"order must be non-negative, got {order}")
        return Series._raw(self._coeffs[: order + 1])

    def valuation(self) -> int | float:
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return INFINITE

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def to_integers(self) -> list[int]:
        """Coefficients as ints; raises ``ArithmeticError`` on any non-integer."""
        for i, c in enumerate(self._coeffs):
            if c.denominator != 1:
                raise ArithmeticError(f"coefficient {i} is not an integer: {c}")
        return [c.numerator for c in self._coeffs]

    def _coerce(self, other: Series | Scalar) -> Series:
        if isinstance(other, Series):
            return other
        return Series([other], self.order)

    def __add__(self, other):
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, self._coerce(other))

    def __rsub__(self, other):
        return sub(self._coerce(other), self)

    def __neg__(self) -> Series:
        return Series._raw(tuple(-c for c in self._coeffs))

    def __mul__(self, other):
        if isinstance(other, Series):
            return mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __pow__(self, k: int) -> Series:
        return pow(self, k)

    def __call__(self, inner: Series) -> Series:
        return compose(self, inner)


def make(coeffs: Iterable[Scalar], order: int) -> Series:
    """Build a series of the given order, zero-padding ``coeffs``."""
    return Series(coeffs, order)


def one(order: int) -> Series:
    return Series([1], order)


def x(order: int) -> Series:
    """The generator ``x`` (the zero series when ``order == 0``)."""
    return Series([0, 1][: order + 1], order)


def valuation(a: Series) -> int | float:
    return a.valuation()


def add(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    return Series._raw(tuple(p + q for p, q in zip(a.coeffs[:n], b.coeffs[:n])))


def sub(a: Series, b: Series) -> Series:
    n = min(a.order, b.order) + 1
    return Series._raw(tuple(p - q for p, q in zip(a.coeffs[:n], b.coeffs[:n])))


def scale(a: Series, c: Scalar) -> Series:
    c = _frac(c)
    return Series._raw(tuple(c * v for v in a.coeffs))


def mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated to the smaller order."""
    n = min(a.order, b.order) + 1
    # Integer convolution over a common denominator; much cheaper than Fractions.
    ai, da = _scaled_integers(a.coeffs[:n])
    bi, db = _scaled_integers(b.coeffs[:n])
    den = da * db
    out = []
    for k in range(n):
        s = 0
        for i in range(k + 1):
            p = ai[i]
            if p:
                s += p * bi[k - i]
        out.append(Fraction(s, den))
    return Series._raw(tuple(out))


def inverse(a: Series) -> Series:
    """Multiplicative inverse; requires a nonzero constant term."""
    a0 = a[0]
    if a0 == 0:
        raise SeriesError("not invertible: constant term is zero")
    inv0 = 1 / a0
    b = [inv0]
    for k in range(1, a.order + 1):
        s = sum(a[i] * b[k - i] for i in range(1, k + 1))
        b.append(-inv0 * s)
    return Series._raw(tuple(b))


def compose(outer: Series, inner: Series) -> Series:
    """``outer(inner(x))`` by Horner's rule; ``inner`` must have no constant term."""
    if inner[0] != 0:
        raise SeriesError("composition undefined: inner series has a nonzero constant term")
    n = min(outer.order, inner.order)
    inner = inner.truncate(n)
    acc = Series([outer[n]], n)
    for i in range(n - 1, -1, -1):
        acc = mul(acc, inner)
        acc = Series._raw((acc[0] + outer[i],) + acc.coeffs[1:])
    return acc


def sqrt(a: Series) -> Series:
    """Square root with constant term 1, by the triangular coefficient recurrence."""
    if a[0] != 1:
        raise SeriesError(f"sqrt requires constant term 1, got {a[0]}")
    r = [Fraction(1)]
    for k in range(1, a.order + 1):
        s = sum(r[i] * r[k - i] for i in range(1, k))
        r.append((a[k] - s) / 2)
    return Series._raw(tuple(r))


def solve_quadratic_fe(a: Series, b: Series, order: int) -> Series:
    """Solve ``F = 1 + a*F + b*F**2`` by fixed-point iteration from ``F = 1``.

    Both ``a`` and ``b`` need valuation >= 1 so that each pass fixes one more
    coefficient; ``order + 1`` passes therefore always suffice.
    """
    if order < 0:
        raise SeriesError(f"order must be non-negative, got {order}")
    if a.valuation() < 1 or b.valuation() < 1:
        raise SeriesError(
            "non-contracting functional equation: a and b need zero constant terms"
        )
    a = a.truncate(order)
    b = b.truncate(order)
    # After pass p the iterate is exact through x**p, so pass p only needs
    # to be carried out modulo x**(p+1).
    f = one(0)
    for p in range(1, order + 1):
        fp = Series._raw(f.coeffs + (Fraction(0),))
        f = one(p) + mul(a.truncate(p), fp) + mul(b.truncate(p), mul(fp, fp))
    return f


def shift(a: Series, k: int) -> Series:
    """Multiply by ``x**k`` keeping the order (high coefficients fall off)."""
    if k < 0:
        raise SeriesError(f"shift amount must be non-negative, got {k}")
    n = a.order + 1
    zeros = (Fraction(0),) * min(k, n)
    return Series._raw((zeros + a.coeffs)[:n])


def pow(a: Series, k: int) -> Series:  # noqa: A001 - mirrors the builtin on purpose
    if k < 0:
        raise SeriesError(f"exponent must be non-negative, got {k}")
    result = one(a.order)
    base = a
    while k:
        if k & 1:
            result = mul(result, base)
        k >>= 1
        if k:
            base = mul(base, base)
    return result
