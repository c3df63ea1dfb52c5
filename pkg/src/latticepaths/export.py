"""Text renderings of grids, matrices and sequences (ascii, csv, json).

Numbers are always written as decimal strings so nothing is lost at any size.
"""

from __future__ import annotations

import csv
import io
import json

from .lattice import PathGrid
from .riordan import TriMatrix

FORMATS = ("ascii", "csv", "json")


def _dump(obj) -> str:
    return json.dumps(obj, indent=None, separators=(", ", ": ")) + "\n"


def _csv(rows) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def grid_ascii(grid: PathGrid) -> str:
    """Rows from the top down, x increasing to the right, zeros left blank."""
    cells = {(px, py): str(v) for px, py, v in grid.nonzero()}
    width = max([len(s) for s in cells.values()] + [len(str(grid.width))])
    lines = []
    for py in range(grid.height, -1, -1):
        row = [cells.get((px, py), "").rjust(width) for px in range(grid.width + 1)]
        lines.append(f"{py:>3} |  " + "  ".join(row).rstrip())
    axis = "  ".join(str(px).rjust(width) for px in range(grid.width + 1))
    lines.append("    +" + "-" * (len(axis) + 2))
    lines.append("       " + axis)
    return "\n".join(lines) + "\n"


def grid_csv(grid: PathGrid) -> str:
    rows = []
    for py in range(grid.height, -1, -1):
        rows.append([str(v) if v else "" for v in grid.row(py)])
    return _csv(rows)


def grid_json(grid: PathGrid) -> str:
    """``{"width", "height", "counts": [[x, y, "count"], ...]}``, nonzero cells only."""
    return _dump(
        {
            "width": grid.width,
            "height": grid.height,
            "counts": [[px, py, str(v)] for px, py, v in grid.nonzero()],
        }
    )


def render_grid(grid: PathGrid, fmt: str) -> str:
    return {"ascii": grid_ascii, "csv": grid_csv, "json": grid_json}[fmt](grid)


def matrix_ascii(m: TriMatrix) -> str:
    lower = m.lower()
    width = max(len(str(v)) for row in lower for v in row)
    return "".join("  ".join(str(v).rjust(width) for v in row) + "\n" for row in lower)


def matrix_csv(m: TriMatrix) -> str:
    return _csv([[str(v) for v in row] for row in m.lower()])


def matrix_json(m: TriMatrix) -> str:
    """``{"n", "rows": [["1"], ["1", "1"], ...]}``."""
    return _dump({"n": m.n, "rows": [[str(v) for v in row] for row in m.lower()]})


def render_matrix(m: TriMatrix, fmt: str) -> str:
    return {"ascii": matrix_ascii, "csv": matrix_csv, "json": matrix_json}[fmt](m)


def render_sequence(label: str, n_colors: int, terms: list[int], fmt: str) -> str:
    if fmt == "ascii":
        return " ".join(str(t) for t in terms) + "\n"
    if fmt == "csv":
        return _csv([["index", "value"]] + [[str(i), str(t)] for i, t in enumerate(terms)])
    return _dump(
        {"family": label, "n_colors": n_colors, "terms": [str(t) for t in terms]}
    )
