"""Riordan arrays: pairs (g, f) whose column k has generating function g * f**k."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import series as ps
from .families import Family, first_return_form
from .series import Series

__all__ = [
    "RiordanPair",
    "TriMatrix",
    "identity",
    "pascal",
    "pascal_power",
    "binomial",
    "binomial_factorial",
    "materialize",
    "riordan_mul",
    "motzkin_pair",
    "schroder_pair",
]


@dataclass(frozen=True)
class RiordanPair:
    g: Series
    f: Series

    def __post_init__(self):
        if self.g[0] == 0:
            raise ValueError("g must have a nonzero constant term")
        if self.f[0] != 0:
            raise ValueError("f must have a zero constant term")

    @property
    def order(self) -> int:
        return min(self.g.order, self.f.order)

    def __mul__(self, other: RiordanPair) -> RiordanPair:
        return riordan_mul(self, other)


@dataclass(frozen=True)
class TriMatrix:
    """Square lower-triangular integer matrix."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has {len(r)} entries, expected {n}")
            if any(r[j] for j in range(i + 1, n)):
                raise ValueError(f"row {i} has entries above the diagonal")
        object.__setattr__(self, "rows", rows)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def column(self, k: int) -> list[int]:
        return [r[k] for r in self.rows]

    def lower(self) -> list[list[int]]:
        """Rows cut at the diagonal: ``[[a00], [a10, a11], ...]``."""
        return [list(r[: i + 1]) for i, r in enumerate(self.rows)]

    def __matmul__(self, other: TriMatrix) -> TriMatrix:
        if self.n != other.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
        n = self.n
        out = []
        for i in range(n):
            a = self.rows[i]
            out.append(
                tuple(
                    sum(a[m] * other.rows[m][j] for m in range(j, i + 1))
                    for j in range(n)
                )
            )
        return TriMatrix(tuple(out))

    @classmethod
    def identity(cls, n: int) -> TriMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def identity(order: int) -> RiordanPair:
    return RiordanPair(ps.one(order), ps.x(order))


def pascal(order: int = 16) -> RiordanPair:
    """Pascal's triangle, ``(1/(1-x), x/(1-x))``."""
    return pascal_power(1, order)


def pascal_power(n: int, order: int = 16) -> RiordanPair:
    """``P**n = (1/(1-nx), x/(1-nx))``; ``n = 0`` gives the identity array."""
    if n < 0:
        raise ValueError(f"power must be non-negative, got {n}")
    g = ps.inverse(ps.make([1, -n][: order + 1], order))
    return RiordanPair(g, ps.shift(g, 1))


@lru_cache(maxsize=None)
def _pascal_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _pascal_row(n - 1)
    return (1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,)


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` by the additive rule; 0 when ``k`` is outside ``0..n``."""
    if n < 0 or k < 0 or k > n:
        return 0
    for m in range(n):  # fill the cache bottom-up, no deep recursion
        _pascal_row(m)
    return _pascal_row(n)[k]


def binomial_factorial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.factorial(n) // (math.factorial(k) * math.factorial(n - k))


def materialize(r: RiordanPair, n: int) -> TriMatrix:
    """The leading ``n x n`` block; entry (i, k) is ``[x**i] g * f**k``."""
    if n < 1:
        raise ValueError(f"dimension must be positive, got {n}")
    if r.order < n - 1:
        raise ValueError(f"series order {r.order} too small for dimension {n}")
    g = r.g.truncate(n - 1)
    f = r.f.truncate(n - 1)
    cols = []
    col = g
    for k in range(n):
        try:
            cols.append(col.to_integers())
        except ArithmeticError as exc:
            raise ArithmeticError(f"column {k} is not integral: {exc}") from None
        col = ps.mul(col, f)
    return TriMatrix(tuple(tuple(cols[k][i] for k in range(n)) for i in range(n)))


def riordan_mul(a: RiordanPair, b: RiordanPair) -> RiordanPair:
    """``(g, f) * (h, l) = (g * h(f), l(f))``; matches ``materialize(a) @ materialize(b)``."""
    return RiordanPair(
        ps.mul(a.g, ps.compose(b.g, a.f)),
        ps.compose(b.f, a.f),
    )


def motzkin_pair(n: int, order: int = 16) -> RiordanPair:
    """``(M_n, x M_n)`` for Motzkin paths with ``n``-colored level steps."""
    m = first_return_form(Family("motzkin", n), order)
    return RiordanPair(m, ps.shift(m, 1))


def schroder_pair(n: int, order: int = 16) -> RiordanPair:
    """``(S_n, x S_n)`` for large Schröder paths with ``n``-colored level steps."""
    s = first_return_form(Family("schroder_large", n), order)
    return RiordanPair(s, ps.shift(s, 1))
