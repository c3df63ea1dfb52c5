"""Catalog of machine-checkable identities for the path families.

Every check returns a :class:`CheckResult`; a failure names the first
mismatching coefficient (or matrix entry) with both values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

from . import families, lattice, riordan
from . import series as ps
from .families import Family
from .riordan import TriMatrix
from .series import Series

__all__ = [
    "CATALOG",
    "CheckError",
    "CheckResult",
    "IdentityCheck",
    "compare_series",
    "compare_matrices",
    "run_check",
    "run_all",
]

LIMITS = {"order": 256, "dimension": 64, "n_colors": 8, "k": 8, "end_x": 16, "n": 64}


class CheckError(ValueError):
    """Unknown check id or parameters outside the supported range."""


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    params: Mapping[str, int] = field(default_factory=dict)
    description: str = ""


@dataclass(frozen=True)
class CheckResult:
    id: str
    passed: bool
    detail: str | None = None

    def to_dict(self) -> dict:
        out: dict = {"id": self.id, "passed": self.passed}
        if self.detail is not None:
            out["detail"] = self.detail
        return out


def compare_series(label: str, left: Series, right: Series) -> str | None:
    """``None`` when equal up to the common order, else the first mismatch."""
    n = min(left.order, right.order)
    for i in range(n + 1):
        if left[i] != right[i]:
            return f"{label}: index {i}: {left[i]} != {right[i]}"
    return None


def compare_matrices(label: str, left: TriMatrix, right: TriMatrix) -> str | None:
    for i in range(left.n):
        for j in range(i + 1):
            if left[i, j] != right[i, j]:
                return f"{label}: entry ({i}, {j}): {left[i, j]} != {right[i, j]}"
    return None


def compare_values(label: str, left: Sequence[int], right: Sequence[int]) -> str | None:
    for i, (a, b) in enumerate(zip(left, right)):
        if a != b:
            return f"{label}: index {i}: {a} != {b}"
    if len(left) != len(right):
        return f"{label}: length {len(left)} != {len(right)}"
    return None


def _first(results) -> str | None:
    for r in results:
        if r is not None:
            return r
    return None


# -- generating functions ---------------------------------------------------

KNOWN_PREFIXES = {
    "catalan": [1, 1, 2, 5, 14, 42],
    "schroder_large": [1, 2, 6, 22, 90, 394],
    "schroder_small": [1, 1, 3, 11, 45, 197],
    "motzkin": [1, 1, 2, 4, 9, 21, 51],
}


def _routes(fam_id: str):
    def check(p):
        fam = Family(fam_id, 1)
        return compare_series(
            f"{fam.label} closed form vs first return",
            families.closed_form(fam, p["order"]),
            families.first_return_form(fam, p["order"]),
        )

    return check


def _routes_colored(fam_id: str):
    def check(p):
        return _first(
            compare_series(
                f"{fam_id}[{n}] closed form vs first return",
                families.closed_form(Family(fam_id, n), p["order"]),
                families.first_return_form(Family(fam_id, n), p["order"]),
            )
            for n in range(p["n_colors"] + 1)
        )

    return check


def _prefix(fam_id: str):
    def check(p):
        expected = KNOWN_PREFIXES[fam_id]
        m = min(p["order"], len(expected) - 1)
        fam = Family(fam_id, 1)
        return _first(
            compare_values(f"{fam.label} {name}", route(fam, m).to_integers(), expected[: m + 1])
            for name, route in (
                ("first return", families.first_return_form),
                ("closed form", families.closed_form),
            )
        )

    return check


def _eq9(p):
    c = families.closed_form("catalan", p["order"])
    xs = ps.x(p["order"])
    return compare_series("C vs 1 + x C^2", c, 1 + xs * c * c)


def _eq10(p):
    s = families.closed_form(Family("schroder_large", 1), p["order"])
    xs = ps.x(p["order"])
    return compare_series("S vs 1 + x S + x S^2", s, 1 + xs * s + xs * s * s)


def _eq11(p):
    big = families.closed_form(Family("schroder_large", 1), p["order"])
    small = families.closed_form(Family("schroder_small", 1), p["order"])
    xs = ps.x(p["order"])
    return compare_series("s vs 1 + x S s", small, 1 + xs * big * small)


def _eq12(p):
    m = families.closed_form(Family("motzkin", 1), p["order"])
    xs = ps.x(p["order"])
    return compare_series("M vs 1 + x M + x^2 M^2", m, 1 + xs * m + ps.shift(m * m, 2))


def _eq22(p):
    out = []
    for n in range(p["n_colors"] + 1):
        s = families.closed_form(Family("schroder_large", n), p["order"])
        xs = ps.x(p["order"])
        out.append(compare_series(f"S_{n} vs 1 + {n}x S + x S^2", s, 1 + n * xs * s + xs * s * s))
    return _first(out)


def _eq24(p):
    out = []
    for n in range(p["n_colors"] + 1):
        m = families.closed_form(Family("motzkin", n), p["order"])
        xs = ps.x(p["order"])
        rhs = 1 + n * xs * m + ps.shift(m * m, 2)
        out.append(compare_series(f"M_{n} vs 1 + {n}x M + x^2 M^2", m, rhs))
    return _first(out)


# -- lattice rows -----------------------------------------------------------


def _rows(fam: Family, order: int, kmax: int) -> list[Series]:
    """Grid rows 0..kmax+1 in the family's coefficient indexing."""
    width = families.lattice_x(fam, order)
    grid = lattice.build_grid(lattice.step_set_for(fam.id, fam.n_colors), width, kmax + 1)
    return [families.row_by_index(grid, fam, k, order) for k in range(kmax + 2)]


def _eq13(p):
    rows = _rows(Family("catalan"), p["order"], p["k"])
    xs = ps.x(p["order"])
    return _first(
        compare_series(f"C_{k} vs x C_{k - 1} + C_{k + 1}", rows[k], xs * rows[k - 1] + rows[k + 1])
        for k in range(1, p["k"] + 1)
    )


def _eq14(p):
    rows = _rows(Family("catalan"), p["order"], 0)
    return compare_series("C_0 - C_1 vs 1", rows[0] - rows[1], ps.one(p["order"]))


def _row_power(fam_id: str, colors: Sequence[int] = (1,)):
    def check(p):
        out = []
        for n in colors if fam_id != "catalan" else (0,):
            fam = Family(fam_id, n)
            rows = _rows(fam, p["order"], p["k"])
            for k in range(p["k"] + 1):
                out.append(
                    compare_series(
                        f"{fam.label} row {k} vs x^{k} G^{k + 1}",
                        rows[k],
                        families.row_sequence(fam, k, p["order"]),
                    )
                )
        return _first(out)

    return check


def _eq16(p):
    rows = _rows(Family("schroder_large", 1), p["order"], p["k"])
    xs = ps.x(p["order"])
    out = [compare_series("S_0 vs 1 + x S_0 + S_1", rows[0], 1 + xs * rows[0] + rows[1])]
    for k in range(1, p["k"] + 1):
        out.append(
            compare_series(
                f"S_{k} vs x S_{k - 1} + x S_{k} + S_{k + 1}",
                rows[k],
                xs * rows[k - 1] + xs * rows[k] + rows[k + 1],
            )
        )
    return _first(out)


def _eq18(p):
    rows = _rows(Family("motzkin", 1), p["order"], p["k"])
    xs = ps.x(p["order"])
    out = [compare_series("M_0 vs 1 + x M_0 + x M_1", rows[0], 1 + xs * rows[0] + xs * rows[1])]
    for k in range(1, p["k"] + 1):
        out.append(
            compare_series(
                f"M_{k} vs x M_{k - 1} + x M_{k} + x M_{k + 1}",
                rows[k],
                xs * (rows[k - 1] + rows[k] + rows[k + 1]),
            )
        )
    return _first(out)


def _row_step(fam_id: str):
    """Row k+1 equals row k times x G, for every color count; also against the grid."""

    def check(p):
        out = []
        for n in range(p["n_colors"] + 1):
            fam = Family(fam_id, n)
            g = families.first_return_form(fam, p["order"])
            for k in range(p["k"] + 1):
                nxt = families.row_sequence(fam, k + 1, p["order"])
                cur = families.row_sequence(fam, k, p["order"])
                out.append(
                    compare_series(f"{fam.label} G_{k + 1} vs G_{k} x G", nxt, cur * ps.shift(g, 1))
                )
        return _first(out) or _row_power(fam_id, range(p["n_colors"] + 1))(p)

    return check


# -- Riordan arrays ---------------------------------------------------------


def _product_check(label, left_pair, right_pair, target_pair, dim) -> str | None:
    product = riordan.riordan_mul(left_pair, right_pair)
    got = riordan.materialize(product, dim)
    matrix_product = riordan.materialize(left_pair, dim) @ riordan.materialize(right_pair, dim)
    return compare_matrices(f"{label} pair product vs matrix product", got, matrix_product) or (
        compare_matrices(f"{label} vs target", got, riordan.materialize(target_pair, dim))
    )


def _eq20(kind: str):
    make_pair = riordan.motzkin_pair if kind == "motzkin" else riordan.schroder_pair
    sym = "M" if kind == "motzkin" else "S"

    def check(p):
        d = p["dimension"]
        P = riordan.pascal(d - 1)
        return _first(
            _product_check(f"P {sym}_{n} = {sym}_{n + 1}", P, make_pair(n, d - 1), make_pair(n + 1, d - 1), d)
            for n in range(p["n_colors"] + 1)
        )

    return check


def _eq21(kind: str):
    make_pair = riordan.motzkin_pair if kind == "motzkin" else riordan.schroder_pair
    sym = "M" if kind == "motzkin" else "S"

    def check(p):
        d = p["dimension"]
        base = make_pair(1, d - 1)
        return _first(
            _product_check(
                f"P^{n} {sym} = {sym}_{n + 1}",
                riordan.pascal_power(n, d - 1),
                base,
                make_pair(n + 1, d - 1),
                d,
            )
            for n in range(p["n_colors"] + 1)
        )

    return check


def _pascal_power(p):
    d = p["dimension"]
    P = riordan.pascal(d - 1)
    mat = riordan.materialize(P, d)
    out = [
        compare_matrices(
            "P vs binomial table",
            mat,
            TriMatrix(tuple(tuple(riordan.binomial(i, j) for j in range(d)) for i in range(d))),
        )
    ]
    power = TriMatrix.identity(d)
    for n in range(p["n"] + 1):
        pn = riordan.pascal_power(n, d - 1)
        out.append(compare_matrices(f"P^{n} pair vs repeated product", riordan.materialize(pn, d), power))
        nxt = riordan.riordan_mul(P, pn)
        target = riordan.pascal_power(n + 1, d - 1)
        out.append(compare_series(f"P P^{n} g vs 1/(1-{n + 1}x)", nxt.g, target.g))
        out.append(compare_series(f"P P^{n} f vs x/(1-{n + 1}x)", nxt.f, target.f))
        out.append(_product_check(f"P P^{n} = P^{n + 1}", P, pn, target, d))
        power = mat @ power
    return _first(out)


def _binomial(p):
    for n in range(p["n"] + 1):
        for k in range(n + 1):
            b = riordan.binomial(n, k)
            f = riordan.binomial_factorial(n, k)
            if b != f:
                return f"C({n}, {k}): recurrence {b} != factorial {f}"
            if k >= 1 and riordan.binomial(n - 1, k - 1) + riordan.binomial(n - 1, k) != b:
                return f"C({n}, {k}): Pascal rule fails"
    return None


# -- oracle -----------------------------------------------------------------


def _oracle(fam_id: str):
    def check(p):
        fam = Family(fam_id, 1)
        steps = lattice.step_set_for(fam.id, fam.n_colors)
        end = p["end_x"]
        grid = lattice.build_grid(steps, end, 0)
        top = end // 2 if fam_id != "motzkin" else end
        gf = families.first_return_form(fam, top)
        for ex in range(end + 1):
            brute = lattice.count_paths_exhaustive(steps, ex)
            if brute != grid[ex, 0]:
                return f"{fam.label}: end_x {ex}: enumeration {brute} != grid {grid[ex, 0]}"
            if fam_id == "motzkin":
                coeff = gf[ex]
            else:
                coeff = gf[ex // 2] if ex % 2 == 0 else 0
            if coeff != brute:
                return f"{fam.label}: end_x {ex}: series {coeff} != enumeration {brute}"
        return None

    return check


@dataclass(frozen=True)
class _Entry:
    description: str
    run: Callable[[dict], str | None]
    defaults: Mapping[str, int]


_ORDER = {"order": 32}
_ROWS = {"order": 32, "k": 5}
_SWEEP = {"order": 32, "n_colors": 6}
_COLORED_ROWS = {"order": 32, "n_colors": 5, "k": 5}
_MATRIX = {"dimension": 12, "n_colors": 4}

CATALOG: dict[str, _Entry] = {
    "eq1": _Entry("Catalan closed form (1 - sqrt(1-4x))/2x equals the first-return solution", _routes("catalan"), _ORDER),
    "eq2": _Entry("Catalan numbers begin 1, 1, 2, 5, 14, 42", _prefix("catalan"), _ORDER),
    "eq3": _Entry("Large Schröder closed form equals the first-return solution", _routes("schroder_large"), _ORDER),
    "eq4": _Entry("Small Schröder closed form equals 1/(1 - x S)", _routes("schroder_small"), _ORDER),
    "eq5": _Entry("Large Schröder numbers begin 1, 2, 6, 22, 90, 394", _prefix("schroder_large"), _ORDER),
    "eq6": _Entry("Small Schröder numbers begin 1, 1, 3, 11, 45, 197", _prefix("schroder_small"), _ORDER),
    "eq7": _Entry("Motzkin closed form equals the first-return solution", _routes("motzkin"), _ORDER),
    "eq8": _Entry("Motzkin numbers begin 1, 1, 2, 4, 9, 21, 51", _prefix("motzkin"), _ORDER),
    "eq9": _Entry("C = 1 + x C^2", _eq9, _ORDER),
    "eq10": _Entry("S = 1 + x S + x S^2", _eq10, _ORDER),
    "eq11": _Entry("s = 1 + x S s", _eq11, _ORDER),
    "eq12": _Entry("M = 1 + x M + x^2 M^2", _eq12, _ORDER),
    "eq13": _Entry("Catalan grid rows: C_k = x C_(k-1) + C_(k+1)", _eq13, _ROWS),
    "eq14": _Entry("Catalan grid rows: C_0 = 1 + C_1", _eq14, _ORDER),
    "eq15": _Entry("Catalan grid row k equals x^k C^(k+1)", _row_power("catalan"), _ROWS),
    "eq16": _Entry("Large Schröder grid rows: S_k = x S_(k-1) + x S_k + S_(k+1)", _eq16, _ROWS),
    "eq17": _Entry("Large Schröder grid row k equals x^k S^(k+1)", _row_power("schroder_large"), _ROWS),
    "eq18": _Entry("Motzkin grid rows: M_k = x M_(k-1) + x M_k + x M_(k+1)", _eq18, _ROWS),
    "eq19": _Entry("Motzkin grid row k equals x^k M^(k+1)", _row_power("motzkin"), _ROWS),
    "eq20-motzkin": _Entry("P M_n = M_(n+1) as Riordan arrays", _eq20("motzkin"), _MATRIX),
    "eq20-schroder": _Entry("P S_n = S_(n+1) as Riordan arrays", _eq20("schroder"), _MATRIX),
    "eq21-motzkin": _Entry("P^n M = M_(n+1) as Riordan arrays", _eq21("motzkin"), _MATRIX),
    "eq21-schroder": _Entry("P^n S = S_(n+1) as Riordan arrays", _eq21("schroder"), _MATRIX),
    "eq22": _Entry("S_n = 1 + n x S_n + x S_n^2 for n-colored level steps", _eq22, _SWEEP),
    "eq23": _Entry("n-colored Schröder closed form equals the first-return solution", _routes_colored("schroder_large"), _SWEEP),
    "eq24": _Entry("M_n = 1 + n x M_n + x^2 M_n^2 for n-colored level steps", _eq24, _SWEEP),
    "eq25": _Entry("n-colored Motzkin closed form equals the first-return solution", _routes_colored("motzkin"), _SWEEP),
    "eq26": _Entry("n-colored Schröder rows: x^(k+1) S_n^(k+2) = (x^k S_n^(k+1)) (x S_n)", _row_step("schroder_large"), _COLORED_ROWS),
    "eq27": _Entry("n-colored Motzkin rows: x^(k+1) M_n^(k+2) = (x^k M_n^(k+1)) (x M_n)", _row_step("motzkin"), _COLORED_ROWS),
    "pascal-power": _Entry("P P^n = P^(n+1) with P^n = (1/(1-nx), x/(1-nx))", _pascal_power, {"dimension": 12, "n": 5}),
    "binomial": _Entry("C(n-1,k-1) + C(n-1,k) = C(n,k) = n!/(k!(n-k)!)", _binomial, {"n": 32}),
    "grid-oracle-catalan": _Entry("Catalan enumeration = grid = series", _oracle("catalan"), {"end_x": 12}),
    "grid-oracle-schroder-large": _Entry("Large Schröder enumeration = grid = series", _oracle("schroder_large"), {"end_x": 12}),
    "grid-oracle-schroder-small": _Entry("Small Schröder enumeration = grid = series", _oracle("schroder_small"), {"end_x": 12}),
    "grid-oracle-motzkin": _Entry("Motzkin enumeration = grid = series", _oracle("motzkin"), {"end_x": 12}),
}


def checks(**overrides: int) -> list[IdentityCheck]:
    """The full catalog as :class:`IdentityCheck` values; overrides apply where used."""
    out = []
    for cid, entry in CATALOG.items():
        params = {k: overrides.get(k, v) for k, v in entry.defaults.items()}
        out.append(IdentityCheck(cid, params, entry.description))
    return out


def _resolve(check: IdentityCheck) -> tuple[_Entry, dict]:
    try:
        entry = CATALOG[check.id]
    except KeyError:
        raise CheckError(f"unknown check id {check.id!r}") from None
    params = dict(entry.defaults)
    for key, value in check.params.items():
        if key not in LIMITS:
            raise CheckError(f"unknown parameter {key!r}")
        if key in entry.defaults:
            params[key] = value
    for key, value in params.items():
        low = 1 if key == "dimension" else 0
        if not low <= value <= LIMITS[key]:
            raise CheckError(f"{key}={value} outside {low}..{LIMITS[key]}")
    return entry, params


def run_check(check: IdentityCheck | str, **params: int) -> CheckResult:
    if isinstance(check, str):
        check = IdentityCheck(check, params)
    entry, resolved = _resolve(check)
    detail = entry.run(resolved)
    return CheckResult(check.id, detail is None, detail)


def run_all(order: int = 32, dimension: int = 12) -> list[CheckResult]:
    """Run every catalog entry in catalog order."""
    todo = checks(order=order, dimension=dimension)
    for c in todo:
        _resolve(c)
    return [run_check(c) for c in todo]
