import pytest

from latticepaths import families, lattice
from latticepaths import series as ps
from latticepaths.families import Family, closed_form, first_return_form, row_sequence


def oracle(fam: Family, index: int) -> int:
    steps = lattice.step_set_for(fam.id, fam.n_colors)
    return lattice.count_paths_exhaustive(steps, families.lattice_x(fam, index))


def test_closed_form_examples():
    assert closed_form("catalan", 5).to_integers() == [1, 1, 2, 5, 14, 42]
    assert closed_form("schroder_small", 5).to_integers() == [1, 1, 3, 11, 45, 197]
    m2 = Family("motzkin", 2)
    assert closed_form(m2, 4).to_integers() == [oracle(m2, j) for j in range(5)]
    assert closed_form(m2, 4).to_integers() == [1, 2, 5, 14, 42]


def test_first_return_examples():
    assert first_return_form(Family("schroder_large", 1), 5).to_integers() == [1, 2, 6, 22, 90, 394]
    assert first_return_form(Family("schroder_large", 0), 5).to_integers() == [1, 1, 2, 5, 14, 42]
    assert first_return_form("motzkin", 6).to_integers() == [1, 1, 2, 4, 9, 21, 51]


def test_family_normalization():
    assert Family("schroder-large").id == "schroder_large"
    assert Family("catalan", 5).n_colors == 0
    assert families.family("catalan").n_colors == 0
    assert families.family("motzkin").n_colors == 1
    with pytest.raises(ValueError):
        Family("motzkin", -1)


@pytest.mark.parametrize("fam_id", lattice.FAMILIES)
@pytest.mark.parametrize("n", range(7))
def test_routes_agree(fam_id, n):
    fam = Family(fam_id, n)
    assert closed_form(fam, 64) == first_return_form(fam, 64)


@pytest.mark.parametrize(
    "fam, top",
    [
        (Family("catalan"), 10),
        (Family("schroder_large", 1), 8),
        (Family("schroder_small", 1), 8),
        (Family("motzkin", 1), 14),
        (Family("motzkin", 0), 14),
        (Family("schroder_large", 3), 6),
        (Family("motzkin", 4), 10),
    ],
)
def test_series_match_enumeration(fam, top):
    gf = first_return_form(fam, top).to_integers()
    assert gf == [oracle(fam, j) for j in range(top + 1)]


def test_lattice_x_adapter():
    assert [families.lattice_x("catalan", j) for j in range(4)] == [0, 2, 4, 6]
    assert [families.lattice_x("schroder_large", j, 1) for j in range(1, 4)] == [1, 3, 5]
    assert [families.lattice_x("motzkin", j, 3) for j in range(4)] == [0, 1, 2, 3]


def test_row_by_index():
    fam = Family("schroder_large", 1)
    grid = lattice.build_grid(lattice.step_set_for("schroder_large"), 10, 5)
    row1 = families.row_by_index(grid, fam, 1, 4)
    assert row1.to_integers() == [0, 1, 4, 16, 68]
    with pytest.raises(ValueError):
        families.row_by_index(grid, fam, 0, 6)


def test_row_sequence_examples():
    assert row_sequence("catalan", 2, 5).to_integers()[2:] == [1, 3, 9, 28]
    assert row_sequence(Family("schroder_large", 1), 1, 4).to_integers()[1:] == [1, 4, 16, 68]
    for fam_id in ("catalan", "schroder_large", "motzkin"):
        assert row_sequence(fam_id, 0, 10) == first_return_form(fam_id, 10)
    with pytest.raises(ValueError, match="small Schröder"):
        row_sequence("schroder_small", 1, 5)


@pytest.mark.parametrize("fam_id", ["catalan", "schroder_large", "motzkin"])
@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_grid_rows_match_row_sequence(fam_id, n):
    fam = Family(fam_id, n)
    order = 16
    grid = lattice.build_grid(lattice.step_set_for(fam.id, fam.n_colors), families.lattice_x(fam, order), 6)
    for k in range(6):
        assert families.row_by_index(grid, fam, k, order) == row_sequence(fam, k, order)


def test_catalan_bottom_rows_differ_by_one():
    grid = lattice.build_grid(lattice.step_set_for("catalan"), 40, 2)
    c0 = families.row_by_index(grid, "catalan", 0, 20)
    c1 = families.row_by_index(grid, "catalan", 1, 20)
    assert c0 - c1 == ps.one(20)


@pytest.mark.parametrize("fam_id", ["schroder_large", "motzkin"])
def test_colored_row_step(fam_id):
    for n in range(6):
        fam = Family(fam_id, n)
        g = first_return_form(fam, 20)
        for k in range(6):
            assert row_sequence(fam, k + 1, 20) == row_sequence(fam, k, 20) * ps.shift(g, 1)


def test_divide_by_x_power():
    s = ps.make([0, 0, 3, 4], 3)
    assert families.divide_by_x_power(s, 2) == ps.make([3, 4], 1)
    with pytest.raises(ArithmeticError):
        families.divide_by_x_power(ps.make([0, 1, 3], 2), 2)


def test_named_sequence_is_integral():
    for fam_id in lattice.FAMILIES:
        for n in range(7):
            seq = families.named_sequence(Family(fam_id, n), 20)
            assert seq.coeffs[0] == 1
            assert all(isinstance(c, int) for c in seq.coeffs)
            if n >= 1:
                assert all(c > 0 for c in seq.coeffs)
