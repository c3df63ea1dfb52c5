"""Exact generating functions, path-count grids and Riordan arrays for
Catalan, Schröder and Motzkin lattice paths."""

from .families import Family, closed_form, first_return_form, row_sequence
from .lattice import build_grid, count_paths_exhaustive, step_set_for
from .riordan import RiordanPair, TriMatrix, materialize, pascal, pascal_power, riordan_mul
from .series import Series

__version__ = "0.1.0"

__all__ = [
    "Family",
    "RiordanPair",
    "Series",
    "TriMatrix",
    "build_grid",
    "closed_form",
    "count_paths_exhaustive",
    "first_return_form",
    "materialize",
    "pascal",
    "pascal_power",
    "riordan_mul",
    "row_sequence",
    "step_set_for",
]
