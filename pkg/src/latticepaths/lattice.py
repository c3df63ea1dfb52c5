"""Step sets, brute-force path enumeration and the lattice count grids.

Paths start at the origin, move right with every step and never dip below
the x-axis. A step's ``colors`` is its multiplicity and ``min_height`` is the
lowest y it may start from; small Schröder paths use ``min_height=1`` on the
level step to forbid it on the axis.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .series import Series

__all__ = [
    "FAMILIES",
    "Step",
    "StepSet",
    "PathGrid",
    "normalize_family",
    "step_set_for",
    "count_paths_exhaustive",
    "build_grid",
    "grid_row_series",
]

FAMILIES = ("catalan", "schroder_large", "schroder_small", "motzkin")


def normalize_family(name: str) -> str:
    """Accept ``schroder-large`` as well as ``schroder_large``."""
    key = name.strip().lower().replace("-", "_")
    if key not in FAMILIES:
        raise ValueError(
            f"unknown family {name!r}; expected one of {', '.join(FAMILIES)}"
        )
    return key


@dataclass(frozen=True)
class Step:
    dx: int
    dy: int
    colors: int = 1
    min_height: int = 0

    def __post_init__(self):
        if self.dx < 1:
            raise ValueError(f"dx must be positive, got {self.dx}")
        if self.colors < 1:
            raise ValueError(f"colors must be at least 1, got {self.colors}")
        if self.min_height < 0:
            raise ValueError(f"min_height must be non-negative, got {self.min_height}")


@dataclass(frozen=True)
class StepSet:
    steps: tuple[Step, ...]
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        if not self.steps:
            raise ValueError("a step set needs at least one step")
        keys = [(s.dx, s.dy, s.min_height) for s in self.steps]
        if len(set(keys)) != len(keys):
            raise ValueError("duplicate (dx, dy, min_height); use colors instead")

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    def max_descent_rate(self) -> float:
        """Largest drop in height per unit of horizontal distance."""
        return max((-s.dy / s.dx for s in self.steps if s.dy < 0), default=0.0)


UP = Step(1, 1)
DOWN = Step(1, -1)


def step_set_for(family: str, n_colors: int = 1) -> StepSet:
    """Step set of a named path family with ``n_colors`` level-step colors.

    ``n_colors == 0`` drops the level step, leaving plain Dyck steps. The
    Catalan family has no level step and ignores ``n_colors``.
    """
    family = normalize_family(family)
    if n_colors < 0:
        raise ValueError(f"n_colors must be non-negative, got {n_colors}")
    steps = [UP, DOWN]
    if family == "catalan":
        return StepSet(tuple(steps), "catalan")
    if n_colors:
        if family == "schroder_large":
            steps.append(Step(2, 0, n_colors))
        elif family == "schroder_small":
            steps.append(Step(2, 0, n_colors, min_height=1))
        else:
            steps.append(Step(1, 0, n_colors))
    return StepSet(tuple(steps), family)


def count_paths_exhaustive(steps: StepSet, end_x: int) -> int:
    """Count weighted paths from (0, 0) to (end_x, 0) by depth-first search.

    Deliberately memo-free so it stays independent of :func:`build_grid`.
    """
    if end_x < 0:
        return 0
    rate = steps.max_descent_rate()
    total = 0
    stack = [(0, 0, 1)]
    while stack:
        px, py, weight = stack.pop()
        if px == end_x:
            if py == 0:
                total += weight
            continue
        for s in reversed(steps.steps):
            if py < s.min_height:
                continue
            nx, ny = px + s.dx, py + s.dy
            if nx > end_x or ny < 0:
                continue
            # Too high to get back down in the remaining distance.
            if ny > (end_x - nx) * rate:
                continue
            stack.append((nx, ny, weight * s.colors))
    return total


@dataclass(frozen=True)
class PathGrid:
    """Path counts ``counts[x][y]`` for ``0 <= x <= width``, ``0 <= y <= height``.

    Counts are exact: paths may climb above ``height`` on their way to a cell.
    """

    width: int
    height: int
    counts: tuple[tuple[int, ...], ...]
    steps: StepSet = field(compare=False, repr=False)

    def __getitem__(self, xy: tuple[int, int]) -> int:
        px, py = xy
        return self.counts[px][py]

    def value(self, px: int, py: int) -> int:
        if 0 <= px <= self.width and 0 <= py <= self.height:
            return self.counts[px][py]
        return 0

    def row(self, k: int) -> list[int]:
        if not 0 <= k <= self.height:
            raise IndexError(f"row {k} outside 0..{self.height}")
        return [self.counts[px][k] for px in range(self.width + 1)]

    def nonzero(self):
        for px in range(self.width + 1):
            for py in range(self.height + 1):
                if self.counts[px][py]:
                    yield px, py, self.counts[px][py]

    def recurrence_violations(self) -> list[tuple[int, int]]:
        """Cells whose count differs from the weighted sum of predecessors.

        The top row is skipped since its down-step predecessors lie outside
        the stored window.
        """
        bad = []
        for px in range(self.width + 1):
            for py in range(self.height):
                if (px, py) == (0, 0):
                    expected = 1
                else:
                    expected = sum(
                        s.colors * self.value(px - s.dx, py - s.dy)
                        for s in self.steps
                        if py - s.dy >= s.min_height
                    )
                if expected != self.counts[px][py]:
                    bad.append((px, py))
        return bad


def build_grid(steps: StepSet, width: int, height: int) -> PathGrid:
    """Dynamic program over lattice points, column by column."""
    if width < 0 or height < 0:
        raise ValueError("width and height must be non-negative")
    # A path to any stored cell never climbs above x <= width, so a strip of
    # this height is exact.
    top = max(width, height)
    cols: list[list[int]] = []
    for px in range(width + 1):
        col = [0] * (top + 1)
        if px == 0:
            col[0] = 1
        else:
            for s in steps:
                sx = px - s.dx
                if sx < 0:
                    continue
                src = cols[sx]
                lo = max(0, s.min_height + s.dy)
                for py in range(lo, top + 1):
                    sy = py - s.dy
                    if 0 <= sy <= top and src[sy]:
                        col[py] += s.colors * src[sy]
        cols.append(col)
    counts = tuple(tuple(c[: height + 1]) for c in cols)
    return PathGrid(width, height, counts, steps)


def grid_row_series(grid: PathGrid, k: int, order: int | None = None) -> Series:
    """Row ``k`` of the grid as a series in the raw lattice x-coordinate."""
    if not 0 <= k <= grid.height:
        raise IndexError(f"row {k} outside 0..{grid.height}")
    if order is None:
        order = grid.width
    if not 0 <= order <= grid.width:
        raise ValueError(f"order {order} exceeds grid width {grid.width}")
    return Series(grid.row(k)[: order + 1], order)
