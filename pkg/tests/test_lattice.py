import itertools

import pytest

from latticepaths import lattice
from latticepaths.lattice import Step, StepSet, build_grid, count_paths_exhaustive, step_set_for


def naive_count(steps: StepSet, end_x: int) -> int:
    """Every step word of every length, filtered; no pruning at all."""
    total = 0
    for length in range(end_x + 1):
        for word in itertools.product(steps.steps, repeat=length):
            if sum(s.dx for s in word) != end_x:
                continue
            y, weight, ok = 0, 1, True
            for s in word:
                if y < s.min_height or y + s.dy < 0:
                    ok = False
                    break
                y += s.dy
                weight *= s.colors
            if ok and y == 0:
                total += weight
    return total


def test_step_sets():
    cat = step_set_for("catalan")
    assert [(s.dx, s.dy) for s in cat] == [(1, 1), (1, -1)]
    mot = step_set_for("motzkin", 1)
    assert [(s.dx, s.dy, s.colors) for s in mot] == [(1, 1, 1), (1, -1, 1), (1, 0, 1)]
    assert len(step_set_for("motzkin", 0)) == 2
    small = step_set_for("schroder-small")
    assert small.steps[-1] == Step(2, 0, 1, min_height=1)
    assert step_set_for("schroder_large", 3).steps[-1].colors == 3


def test_step_set_errors():
    with pytest.raises(ValueError, match="unknown family"):
        step_set_for("fibonacci")
    with pytest.raises(ValueError):
        step_set_for("motzkin", -1)
    with pytest.raises(ValueError):
        StepSet(())
    with pytest.raises(ValueError):
        StepSet((Step(1, 1), Step(1, 1, colors=2)))
    with pytest.raises(ValueError):
        Step(1, 0, colors=0)


def test_motzkin_without_level_steps_is_aerated_catalan():
    steps = step_set_for("motzkin", 0)
    assert [count_paths_exhaustive(steps, n) for n in range(7)] == [1, 0, 1, 0, 2, 0, 5]


@pytest.mark.parametrize(
    "family, n, end_x, expected",
    [("catalan", 0, 6, 5), ("schroder_large", 1, 8, 90), ("motzkin", 1, 8, 323)],
)
def test_count_paths_exhaustive(family, n, end_x, expected):
    assert count_paths_exhaustive(step_set_for(family, n), end_x) == expected


@pytest.mark.parametrize("family", lattice.FAMILIES)
@pytest.mark.parametrize("n", [0, 1, 2])
def test_enumerator_matches_naive_words(family, n):
    steps = step_set_for(family, n)
    for end_x in range(9):
        assert count_paths_exhaustive(steps, end_x) == naive_count(steps, end_x)


def test_grid_examples():
    assert build_grid(step_set_for("catalan"), 10, 5)[6, 2] == 9
    assert build_grid(step_set_for("schroder_large"), 10, 5)[8, 2] == 146
    assert build_grid(step_set_for("schroder_small"), 10, 5)[9, 1] == 197


def test_grid_row_series():
    grid = build_grid(step_set_for("catalan"), 10, 5)
    row1 = lattice.grid_row_series(grid, 1)
    assert [row1[e] for e in (1, 3, 5, 7, 9)] == [1, 2, 5, 14, 42]
    assert all(row1[e] == 0 for e in (0, 2, 4, 6, 8, 10))
    motz = build_grid(step_set_for("motzkin"), 7, 3)
    assert lattice.grid_row_series(motz, 1).to_integers() == [0, 1, 2, 5, 12, 30, 76, 196]
    assert lattice.grid_row_series(motz, 0)[0] == 1
    with pytest.raises(IndexError):
        lattice.grid_row_series(motz, 4)
    with pytest.raises(ValueError):
        lattice.grid_row_series(motz, 0, 8)


def test_grid_counts_exceed_window_height():
    # Paths to (8, 0) may climb to height 4 even when only row 0 is kept.
    assert build_grid(step_set_for("catalan"), 8, 0)[8, 0] == 14


@pytest.mark.parametrize("family", lattice.FAMILIES)
@pytest.mark.parametrize("n", [0, 1, 3])
def test_grid_invariants(family, n):
    steps = step_set_for(family, n)
    grid = build_grid(steps, 14, 7)
    assert grid[0, 0] == 1
    assert grid.recurrence_violations() == []
    for px in range(15):
        for py in range(8):
            v = grid[px, py]
            assert v >= 0
            if py > px:
                assert v == 0
            if family != "motzkin" and (px - py) % 2:
                assert v == 0
    for end_x in range(13):
        assert grid[end_x, 0] == count_paths_exhaustive(steps, end_x)


def test_small_schroder_is_half_of_large():
    large = step_set_for("schroder_large")
    small = step_set_for("schroder_small")
    for end_x in range(2, 13, 2):
        assert count_paths_exhaustive(large, end_x) == 2 * count_paths_exhaustive(small, end_x)
