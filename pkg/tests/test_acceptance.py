"""Acceptance checks, one per release criterion, in order.

Each test prints a single ``[criterion NN] PASS/FAIL`` line (visible even
under captured output) and then asserts.  The whole module is expected to
finish in well under thirty seconds; criterion 11 enforces that budget.
"""

import time
from pathlib import Path

import pytest

from binshift.cli import main
from binshift.exactnum import Poly
from binshift.families import (
    INTEGER_FAMILIES,
    TABLE1_GOLDEN,
    TABLE2_GOLDEN,
    family_prefix,
    family_recurrence,
    generalized_mersenne_transformed,
    get_family,
    recurrences_table,
    special_identities_report,
)
from binshift.recurrence import second_order_template, transform_recurrence, unroll
from binshift.series import OGF, prefix_from_series, series_compose_geometric, series_from_prefix
from binshift.transform import apply_transform
from binshift.verify import run_suite

_T0 = time.perf_counter()
_SEED = 20260814
_reports = {}

GOLDEN_SEGMENTS = Path(__file__).parent / "golden" / "table2_segments.csv"


def _suite(name, depth):
    if name not in _reports:
        _reports[name] = run_suite(name, seed=_SEED, cases=100, depth=depth)
    return _reports[name]


def _property(report, name):
    return next(p for p in report.properties if p.name == name)


@pytest.fixture
def criterion(capsys):
    def check(num, desc, ok):
        with capsys.disabled():
            print(f"[criterion {num:02d}] {'PASS' if ok else 'FAIL'} {desc}")
        assert ok, f"criterion {num} failed: {desc}"

    return check


def test_criterion_01_segments_three_ways(criterion):
    t0 = time.perf_counter()
    ok = True
    checked = 0
    for (name, r), golden in TABLE2_GOLDEN.items():
        direct = apply_transform(family_prefix(name, 9), r).values
        rerolled = unroll(transform_recurrence(family_recurrence(name), r), 9).values
        f = series_from_prefix(family_prefix(name, 9), OGF)
        composed = prefix_from_series(series_compose_geometric(f, r)).values
        for path in (direct, rerolled, composed):
            ok = ok and tuple(path) == golden
        checked += len(golden)
    elapsed = time.perf_counter() - t0
    ok = ok and checked == 100 and elapsed < 1.0
    criterion(1, "embedded segment table matches via three independent paths", ok)


def test_criterion_02_symbolic_recurrences(criterion):
    rows = recurrences_table()
    ok = len(rows) == 5 and all(row.ok for row in rows)
    r = Poly.indeterminate("r")
    for name in INTEGER_FAMILIES:
        spec = get_family(name)
        b1, b2 = second_order_template(spec.p, spec.q, r)
        g1, g2, _ = TABLE1_GOLDEN[name]
        ok = ok and b1 == g1 and b2 == g2
    criterion(2, "symbolic transformed recurrences match the embedded table", ok)


def test_criterion_03_semigroup_laws(criterion):
    t0 = time.perf_counter()
    report = _suite("semigroup", depth=12)
    elapsed = time.perf_counter() - t0
    compose = _property(report, "compose_additive")
    inverse = _property(report, "inverse_roundtrip")
    ok = (
        report.ok
        and compose.ok
        and inverse.ok
        and compose.cases >= 100
        and inverse.cases >= 100
        and elapsed < 2.0
    )
    criterion(3, "shift composition adds and inverts on random prefixes", ok)


def test_criterion_04_annihilation(criterion):
    prop = _property(_suite("rootshift", depth=20), "annihilation")
    ok = prop.ok and prop.cases >= 100
    criterion(4, "shifted characteristic polynomial annihilates the transform", ok)


def test_criterion_05_intertwining(criterion):
    prop = _property(_suite("rootshift", depth=20), "intertwining_zero")
    ok = prop.ok and prop.cases >= 100
    criterion(5, "shift operator intertwines exactly with the transform", ok)


def test_criterion_06_coefficient_formula(criterion):
    prop = _property(_suite("rootshift", depth=20), "shift_matches_substitution")
    ok = prop.ok and prop.cases >= 100
    criterion(6, "coefficient formula equals direct polynomial substitution", ok)


def test_criterion_07_shift_one_identities(criterion):
    checks = special_identities_report(20)
    ok = len(checks) == 4 * 21 and all(c.ok for c in checks)
    criterion(7, "the four shift-1 identities hold through index 20", ok)


def test_criterion_08_model_equivalences(criterion):
    report = _suite("models", depth=20)
    ok = all(
        _property(report, name).ok
        for name in (
            "binet_shift_equivalence",
            "matrix_shift_equivalence",
            "colored_matches_operator",
        )
    )
    criterion(8, "closed-form, matrix, and counting models match the transform", ok)


def test_criterion_09_generating_functions(criterion):
    report = _suite("models", depth=20)
    ok = all(
        _property(report, name).ok
        for name in ("ogf_matches_operator", "egf_matches_operator", "riordan_closed_form")
    )
    criterion(9, "series transforms and array entries match the operator", ok)


def test_criterion_10_polynomial_family(criterion):
    ok = True
    for r in (0, 1, 2):
        via_recurrence = generalized_mersenne_transformed(r, 10)
        via_transform = apply_transform(family_prefix("wpoly", 10), r)
        ok = ok and via_recurrence == via_transform
    criterion(10, "transformed polynomial family matches termwise transforms", ok)


def test_criterion_11_cli_contract(criterion, capsys):
    verify_code = main(["verify", "all"])
    capsys.readouterr()
    table_code = main(["table", "segments", "--format", "csv"])
    out = capsys.readouterr().out
    elapsed = time.perf_counter() - _T0
    ok = (
        verify_code == 0
        and table_code == 0
        and out == GOLDEN_SEGMENTS.read_text()
        and elapsed < 30.0
    )
    criterion(11, "CLI verify passes and the table export is byte-exact", ok)
