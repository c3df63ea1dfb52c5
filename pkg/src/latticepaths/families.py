"""Generating functions of the Catalan, Schröder and Motzkin path families.

Each family is computable two ways: a closed form built from a square root,
and the quadratic first-return equation solved by fixed-point iteration.

Coefficient indexing: Catalan and Schröder series are indexed by semi-length
(index ``j`` counts paths ending at lattice x = ``2j``) while Motzkin series
are indexed by raw length. :func:`lattice_x` is the single place that maps
between the two.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import series as ps
from .lattice import PathGrid, grid_row_series, normalize_family
from .series import Series

__all__ = [
    "Family",
    "NamedSequence",
    "family",
    "divide_by_x_power",
    "closed_form",
    "first_return_form",
    "row_sequence",
    "named_sequence",
    "lattice_x",
    "row_by_index",
]

_DEFAULT_COLORS = {"catalan": 0, "schroder_large": 1, "schroder_small": 1, "motzkin": 1}


@dataclass(frozen=True)
class Family:
    id: str
    n_colors: int = 1

    def __post_init__(self):
        object.__setattr__(self, "id", normalize_family(self.id))
        if self.id == "catalan":
            object.__setattr__(self, "n_colors", 0)
        if self.n_colors < 0:
            raise ValueError(f"n_colors must be non-negative, got {self.n_colors}")

    @property
    def label(self) -> str:
        base = self.id.replace("_", "-")
        if self.id == "catalan" or self.n_colors == 1:
            return base
        return f"{base}[{self.n_colors}]"


def family(name: str | Family, n_colors: int | None = None) -> Family:
    if isinstance(name, Family):
        return name if n_colors is None else Family(name.id, n_colors)
    key = normalize_family(name)
    return Family(key, _DEFAULT_COLORS[key] if n_colors is None else n_colors)


@dataclass(frozen=True)
class NamedSequence:
    family: Family
    order: int
    coeffs: tuple[int, ...]


def divide_by_x_power(a: Series, k: int) -> Series:
    """Exact division by ``x**k``; the result loses ``k`` orders of precision."""
    if k > a.order:
        raise ArithmeticError(f"cannot divide a series of order {a.order} by x^{k}")
    for i in range(k):
        if a[i] != 0:
            raise ArithmeticError(
                f"division by x^{k} leaves a remainder: coefficient {i} is {a[i]}"
            )
    return Series(a.coeffs[k:], a.order - k)


def _poly(coeffs: list[int], order: int) -> Series:
    """A polynomial cut down to ``order``."""
    return Series(coeffs[: order + 1], order)


def _assert_integral(s: Series, fam: Family) -> Series:
    for i, c in enumerate(s):
        if c.denominator != 1:
            raise ArithmeticError(
                f"{fam.label}: coefficient {i} is {c}, expected an integer"
            )
    return s


def closed_form(fam: Family | str, order: int) -> Series:
    """Closed-form generating function, evaluated through the series square root."""
    fam = family(fam)
    n = fam.n_colors
    if fam.id == "motzkin":
        # (1 - n x - sqrt(1 - 2n x + (n^2 - 4) x^2)) / (2 x^2)
        m = order + 2
        root = ps.sqrt(_poly([1, -2 * n, n * n - 4], m))
        num = _poly([1, -n], m) - root
        out = ps.scale(divide_by_x_power(num, 2), Fraction(1, 2))
    elif fam.id == "schroder_small":
        # (1 + n x - sqrt(1 - (2n + 4) x + n^2 x^2)) / (2 (n + 1) x)
        m = order + 1
        root = ps.sqrt(_poly([1, -(2 * n + 4), n * n], m))
        num = _poly([1, n], m) - root
        out = ps.scale(divide_by_x_power(num, 1), Fraction(1, 2 * (n + 1)))
    else:
        # Catalan is the n = 0 case: (1 - sqrt(1 - 4x)) / (2x).
        m = order + 1
        root = ps.sqrt(_poly([1, -(2 * n + 4), n * n], m))
        num = _poly([1, -n], m) - root
        out = ps.scale(divide_by_x_power(num, 1), Fraction(1, 2))
    return _assert_integral(out, fam)


def first_return_form(fam: Family | str, order: int) -> Series:
    """Generating function from the first-return functional equation."""
    fam = family(fam)
    n = fam.n_colors
    xs = ps.x(order)
    if fam.id == "motzkin":
        out = ps.solve_quadratic_fe(ps.scale(xs, n), ps.shift(xs, 1), order)
    elif fam.id == "schroder_small":
        large = first_return_form(Family("schroder_large", n), order)
        out = ps.inverse(ps.one(order) - ps.shift(large, 1))
    else:
        out = ps.solve_quadratic_fe(ps.scale(xs, n), xs, order)
    return _assert_integral(out, fam)


def row_sequence(fam: Family | str, k: int, order: int) -> Series:
    """Generating function ``x**k * G**(k+1)`` of lattice row ``k``."""
    fam = family(fam)
    if fam.id == "schroder_small":
        raise ValueError(
            "row recursion does not apply to small Schröder paths: "
            "the level step is missing only on row zero"
        )
    if k < 0:
        raise ValueError(f"row index must be non-negative, got {k}")
    g = first_return_form(fam, order)
    return ps.shift(ps.pow(g, k + 1), k)


def named_sequence(fam: Family | str, order: int) -> NamedSequence:
    fam = family(fam)
    return NamedSequence(fam, order, tuple(first_return_form(fam, order).to_integers()))


def lattice_x(fam: Family | str, index: int, row: int = 0) -> int:
    """Lattice x-coordinate on ``row`` of the coefficient at ``index``.

    Semi-length families place index ``j`` at ``2j - row``; Motzkin at ``j``.
    """
    fam = family(fam)
    if fam.id == "motzkin":
        return index
    return 2 * index - row


def row_by_index(grid: PathGrid, fam: Family | str, k: int, order: int) -> Series:
    """Grid row ``k`` re-indexed to the family's coefficient convention."""
    fam = family(fam)
    need = max(lattice_x(fam, order, k), 0)
    if need > grid.width:
        raise ValueError(f"grid width {grid.width} too small for order {order}")
    raw = grid_row_series(grid, k, need)
    coeffs = []
    for j in range(order + 1):
        px = lattice_x(fam, j, k)
        coeffs.append(raw[px] if px >= 0 else 0)
    return Series(coeffs, order)
