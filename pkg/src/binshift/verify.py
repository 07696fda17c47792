"""Seeded self-verification suites exposed through the CLI.

Four suites, each a list of named properties checked over many exact
cases (randomized ones draw from a ``random.Random`` seeded explicitly,
so a report is reproducible byte for byte):

* ``semigroup``: composition, inversion, linearity, triangularity and
  iterated-transform laws of the shift operator family.
* ``rootshift``: the shifted characteristic polynomial annihilates the
  transformed sequence; shifting is additive and invertible; the
  coefficient formula agrees with naive polynomial substitution; the
  shift-operator intertwining residual vanishes; transformed recurrences
  reproduce the transform termwise.
* ``identities``: the embedded reference tables and the shift-1 special
  identities of the classical families.
* ``models``: Binet, matrix and colored-count models, plus the
  OGF/EGF/Riordan generating-function views, all against the direct
  sequence operator.

``run_suite("all", ...)`` executes every suite with qualified property
names.  Each property reports how many cases it ran and, on failure, a
minimal description of the first failing case.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .exactnum import (
    RAT,
    domain_of,
    join_domains,
    one,
    promote,
    render_scalar,
    zero,
)
from .families import (
    INTEGER_FAMILIES,
    family_binet_form,
    family_names,
    family_prefix,
    family_recurrence,
    recurrences_table,
    special_identities_report,
    table_initial_segments,
)
from .models import (
    MatrixModel,
    binet_eval,
    binet_shift,
    colored_count_bruteforce,
    matrix_transform_eval,
    model_from_recurrence,
)
from .recurrence import (
    CharPoly,
    Recurrence,
    apply_char_operator,
    intertwine_residual,
    shift_characteristic,
    transform_recurrence,
    unroll,
)
from .series import (
    EGF,
    egf_transform,
    riordan_entry,
    series_compose_geometric,
    series_from_prefix,
)
from .transform import (
    SequencePrefix,
    apply_transform,
    compose_transforms,
    inverse_transform,
    iterated_binomial,
)

__all__ = ["PropertyResult", "SuiteReport", "SUITE_NAMES", "run_suite"]


@dataclass(frozen=True)
class PropertyResult:
    """Outcome of one property: cases run and the first failure, if any."""

    name: str
    cases: int
    ok: bool
    failure: str | None = None


@dataclass(frozen=True)
class SuiteReport:
    suite: str
    seed: int
    requested_cases: int
    properties: list[PropertyResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(p.ok for p in self.properties)


# Each property receives the shared RNG, the requested case count for
# randomized checks, and the index depth for enumerated ones; it returns
# (cases actually run, failure message or None).
PropFn = Callable[[random.Random, int, int], tuple[int, "str | None"]]


def _rand_fraction(rng: random.Random, bound: int = 9, max_den: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, max_den))


def _rand_rat_prefix(rng: random.Random, length: int) -> SequencePrefix:
    return SequencePrefix([_rand_fraction(rng) for _ in range(length)], RAT)


def _rand_monic(rng: random.Random, max_degree: int) -> CharPoly:
    d = rng.randint(1, max_degree)
    tail = [_rand_fraction(rng, 5, 4) for _ in range(d - 1)]
    # keep the constant term nonzero so unrolled sequences stay generic
    const = _rand_fraction(rng, 5, 4)
    if const == 0:
        const = Fraction(1)
    return CharPoly([Fraction(1), *tail, const])


# --- semigroup suite -------------------------------------------------------


def _prop_compose_additive(rng, cases, depth):
    for i in range(cases):
        a = _rand_rat_prefix(rng, 12)
        r, s = _rand_fraction(rng), _rand_fraction(rng)
        nested = apply_transform(apply_transform(a, s), r)
        if compose_transforms(a, r, s) != nested:
            return i + 1, f"case {i}: r={r}, s={s}"
    return cases, None


def _prop_inverse_roundtrip(rng, cases, depth):
    for i in range(cases):
        a = _rand_rat_prefix(rng, 12)
        r = _rand_fraction(rng)
        if inverse_transform(apply_transform(a, r), r) != a:
            return i + 1, f"case {i}: r={r}"
    return cases, None


def _prop_linearity(rng, cases, depth):
    for i in range(cases):
        xs = _rand_rat_prefix(rng, 10)
        ys = _rand_rat_prefix(rng, 10)
        alpha, beta = _rand_fraction(rng), _rand_fraction(rng)
        r = _rand_fraction(rng)
        mixed = SequencePrefix(
            [alpha * x + beta * y for x, y in zip(xs, ys)], RAT
        )
        lhs = apply_transform(mixed, r).values
        tx, ty = apply_transform(xs, r), apply_transform(ys, r)
        rhs = tuple(alpha * x + beta * y for x, y in zip(tx, ty))
        if lhs != rhs:
            return i + 1, f"case {i}: r={r}, alpha={alpha}, beta={beta}"
    return cases, None


def _prop_triangularity(rng, cases, depth):
    for i in range(cases):
        vals = [_rand_fraction(rng) for _ in range(10)]
        r = _rand_fraction(rng)
        cut = rng.randrange(10)
        other = list(vals)
        for k in range(cut + 1, 10):
            other[k] = _rand_fraction(rng)
        b1 = apply_transform(SequencePrefix(vals, RAT), r)
        b2 = apply_transform(SequencePrefix(other, RAT), r)
        if b1.values[: cut + 1] != b2.values[: cut + 1]:
            return i + 1, f"case {i}: outputs 0..{cut} depend on later inputs"
    return cases, None


def _prop_iterated_additive(rng, cases, depth):
    for i in range(cases):
        a = SequencePrefix([rng.randint(-9, 9) for _ in range(10)])
        m1, m2 = rng.randint(0, 3), rng.randint(0, 3)
        twice = iterated_binomial(iterated_binomial(a, m1), m2)
        if twice != iterated_binomial(a, m1 + m2):
            return i + 1, f"case {i}: m1={m1}, m2={m2}"
    return cases, None


# --- rootshift suite -------------------------------------------------------


def _prop_annihilation(rng, cases, depth):
    for i in range(cases):
        p = _rand_monic(rng, 4)
        d = p.degree
        rec = Recurrence(p, [_rand_fraction(rng, 5, 4) for _ in range(d)])
        r = _rand_fraction(rng, 5, 4)
        b = apply_transform(unroll(rec, 20), r)
        residual = apply_char_operator(shift_characteristic(p, r), b)
        # residual indices 0..20-d cover 0..16 for every degree <= 4
        if any(v != 0 for v in residual):
            return i + 1, f"case {i}: degree {d}, r={r}"
    return cases, None


def _prop_shift_additive(rng, cases, depth):
    for i in range(cases):
        p = _rand_monic(rng, 5)
        r, s = _rand_fraction(rng), _rand_fraction(rng)
        if shift_characteristic(shift_characteristic(p, s), r) != shift_characteristic(
            p, r + s
        ):
            return i + 1, f"case {i}: r={r}, s={s}"
    return cases, None


def _prop_shift_roundtrip(rng, cases, depth):
    for i in range(cases):
        p = _rand_monic(rng, 5)
        r = _rand_fraction(rng)
        if shift_characteristic(shift_characteristic(p, r), -r) != p:
            return i + 1, f"case {i}: r={r}"
    return cases, None


def _naive_substitution_shift(p: CharPoly, r) -> CharPoly:
    """Expand P(X - r) by Horner over explicit polynomial multiplication.

    Independent of the coefficient formula in shift_characteristic; used
    as its cross-check.
    """
    target = join_domains(p.domain, domain_of(r))
    rp = promote(r, target)
    zero_s, one_s = zero(target), one(target)

    def xmul(f, g):
        out = [zero_s] * (len(f) + len(g) - 1)
        for i, x in enumerate(f):
            for j, y in enumerate(g):
                out[i + j] = out[i + j] + x * y
        return out

    base = [-rp, one_s]  # X - r in ascending powers
    acc = [promote(p.coeffs[0], target)]
    for c in p.coeffs[1:]:
        acc = xmul(acc, base)
        acc[0] = acc[0] + promote(c, target)
    return CharPoly(list(reversed(acc)), target)


def _prop_shift_matches_substitution(rng, cases, depth):
    for i in range(cases):
        p = _rand_monic(rng, 6)
        r = _rand_fraction(rng)
        if shift_characteristic(p, r) != _naive_substitution_shift(p, r):
            return i + 1, f"case {i}: degree {p.degree}, r={r}"
    return cases, None


def _prop_intertwining_zero(rng, cases, depth):
    for i in range(cases):
        a = _rand_rat_prefix(rng, 10)
        r = _rand_fraction(rng)
        if any(v != 0 for v in intertwine_residual(a, r)):
            return i + 1, f"case {i}: r={r}"
    return cases, None


def _prop_transformed_recurrence_coherent(rng, cases, depth):
    ran = 0
    for name in INTEGER_FAMILIES:
        rec = family_recurrence(name)
        base = unroll(rec, depth)
        for r in range(-2, 3):
            ran += 1
            direct = apply_transform(base, r)
            rerolled = unroll(transform_recurrence(rec, r), depth)
            if direct != rerolled:
                return ran, f"{name} at r={r}"
    return ran, None


# --- identities suite ------------------------------------------------------


def _make_special_identity_prop(identity: str) -> PropFn:
    def prop(rng, cases, depth):
        checks = [
            c for c in special_identities_report(depth) if c.identity == identity
        ]
        for c in checks:
            if not c.ok:
                return len(checks), f"n={c.n}: {c.lhs} != {c.rhs}"
        return len(checks), None

    return prop


def _prop_table_segments(rng, cases, depth):
    rows = table_initial_segments()
    cells = sum(len(row.golden) for row in rows)
    for row in rows:
        if not row.ok:
            return cells, f"{row.family} at r={row.r}: {row.values}"
    return cells, None


def _prop_table_recurrences(rng, cases, depth):
    rows = recurrences_table()
    for row in rows:
        if not row.ok:
            return len(rows), f"{row.family}: b1={row.b1.compact()}"
    return len(rows), None


def _prop_wpoly_matches_operator(rng, cases, depth):
    base = family_prefix("wpoly", 10)
    ran = 0
    for r in (0, 1, 2):
        direct = apply_transform(base, r)
        from_template = unroll(
            transform_recurrence(family_recurrence("wpoly"), r), 10
        )
        for n in range(11):
            ran += 1
            if direct[n] != from_template[n]:
                return ran, f"r={r}, n={n}"
    return ran, None


# --- models suite ----------------------------------------------------------


def _prop_binet_matches_base(rng, cases, depth):
    ran = 0
    for name in INTEGER_FAMILIES:
        form = family_binet_form(name)
        base = family_prefix(name, depth)
        for n in range(depth + 1):
            ran += 1
            if binet_eval(form, n) != base[n]:
                return ran, f"{name} at n={n}"
    return ran, None


def _prop_binet_shift_equivalence(rng, cases, depth):
    ran = 0
    for name in INTEGER_FAMILIES:
        form = family_binet_form(name)
        base = family_prefix(name, depth)
        for r in (-2, -1, 1, 2):
            shifted = binet_shift(form, r)
            b = apply_transform(base, r)
            for n in range(depth + 1):
                ran += 1
                if binet_eval(shifted, n) != b[n]:
                    return ran, f"{name} at r={r}, n={n}"
    return ran, None


def _prop_matrix_shift_equivalence(rng, cases, depth):
    ran = 0
    n_top = min(depth, 15)
    for name in INTEGER_FAMILIES:
        model = model_from_recurrence(family_recurrence(name))
        base = family_prefix(name, n_top)
        for r in (-1, 1, 2, Fraction(1, 2)):
            b = apply_transform(base, r)
            for n in range(n_top + 1):
                ran += 1
                if matrix_transform_eval(model, r, n) != b[n]:
                    return ran, f"{name} at r={r}, n={n}"
    return ran, None


def _prop_matrix_shift_additive(rng, cases, depth):
    for i in range(cases):
        dim = rng.randint(1, 3)
        rows = [[rng.randint(-3, 3) for _ in range(dim)] for _ in range(dim)]
        u = [rng.randint(-2, 2) for _ in range(dim)]
        v = [rng.randint(-2, 2) for _ in range(dim)]
        model = MatrixModel(rows, u, v)
        r, s = rng.randint(-2, 2), rng.randint(-2, 2)
        n = rng.randint(0, 6)
        once = matrix_transform_eval(model, r + s, n)
        shifted_rows = [
            [x + (s if i2 == j2 else 0) for j2, x in enumerate(row)]
            for i2, row in enumerate(rows)
        ]
        twice = matrix_transform_eval(MatrixModel(shifted_rows, u, v), r, n)
        if once != twice:
            return i + 1, f"case {i}: dim={dim}, r={r}, s={s}, n={n}"
    return cases, None


def _prop_colored_matches_operator(rng, cases, depth):
    top = min(depth, 8)
    for i in range(cases):
        n = rng.randint(0, top)
        values = [rng.randint(0, 6) for _ in range(n + 1)]
        r = rng.randint(0, 3)
        a = SequencePrefix(values)
        if colored_count_bruteforce(a, r, n) != apply_transform(a, r)[n]:
            return i + 1, f"case {i}: n={n}, r={r}"
    return cases, None


_GF_SHIFTS = (-2, -1, 0, 1, 2, Fraction(1, 2))


def _prop_ogf_matches_operator(rng, cases, depth):
    ran = 0
    for name in family_names():
        base = family_prefix(name, 16)
        f = series_from_prefix(base)
        for r in _GF_SHIFTS:
            ran += 1
            composed = series_compose_geometric(f, r)
            direct = apply_transform(base, r)
            if any(composed.coefficient(n) != direct[n] for n in range(17)):
                return ran, f"{name} at r={render_scalar(r)}"
    return ran, None


def _prop_egf_matches_operator(rng, cases, depth):
    ran = 0
    for name in family_names():
        base = family_prefix(name, 16)
        f = series_from_prefix(base, EGF)
        for r in _GF_SHIFTS:
            ran += 1
            multiplied = egf_transform(f, r)
            direct = apply_transform(base, r)
            if any(multiplied.coefficient(n) != direct[n] for n in range(17)):
                return ran, f"{name} at r={render_scalar(r)}"
    return ran, None


def _prop_riordan_closed_form(rng, cases, depth):
    ran = 0
    for r in _GF_SHIFTS:
        for n in range(13):
            for k in range(n + 1):
                ran += 1
                expected = math.comb(n, k) * r ** (n - k)
                if riordan_entry(r, n, k) != expected:
                    return ran, f"r={render_scalar(r)}, n={n}, k={k}"
        ran += 1
        if riordan_entry(r, 3, 7) != 0:
            return ran, f"r={render_scalar(r)}: entry above the diagonal"
    return ran, None


def _prop_riordan_action(rng, cases, depth):
    for i in range(cases):
        a = SequencePrefix([rng.randint(-9, 9) for _ in range(10)])
        r = rng.choice((-1, 1, 2))
        n = rng.randrange(10)
        acc = 0
        for k in range(n + 1):
            acc += riordan_entry(r, n, k) * a[k]
        if acc != apply_transform(a, r)[n]:
            return i + 1, f"case {i}: r={r}, n={n}"
    return cases, None


_SUITES: dict[str, tuple[tuple[str, PropFn], ...]] = {
    "semigroup": (
        ("compose_additive", _prop_compose_additive),
        ("inverse_roundtrip", _prop_inverse_roundtrip),
        ("linearity", _prop_linearity),
        ("triangularity", _prop_triangularity),
        ("iterated_additive", _prop_iterated_additive),
    ),
    "rootshift": (
        ("annihilation", _prop_annihilation),
        ("shift_additive", _prop_shift_additive),
        ("shift_roundtrip", _prop_shift_roundtrip),
        ("shift_matches_substitution", _prop_shift_matches_substitution),
        ("intertwining_zero", _prop_intertwining_zero),
        ("transformed_recurrence_coherent", _prop_transformed_recurrence_coherent),
    ),
    "identities": (
        ("fibonacci_even_index", _make_special_identity_prop("fibonacci_even_index")),
        ("lucas_even_index", _make_special_identity_prop("lucas_even_index")),
        ("mersenne_power_gap", _make_special_identity_prop("mersenne_power_gap")),
        ("jacobsthal_power", _make_special_identity_prop("jacobsthal_power")),
        ("table_segments", _prop_table_segments),
        ("table_recurrences", _prop_table_recurrences),
        ("wpoly_matches_operator", _prop_wpoly_matches_operator),
    ),
    "models": (
        ("binet_matches_base", _prop_binet_matches_base),
        ("binet_shift_equivalence", _prop_binet_shift_equivalence),
        ("matrix_shift_equivalence", _prop_matrix_shift_equivalence),
        ("matrix_shift_additive", _prop_matrix_shift_additive),
        ("colored_matches_operator", _prop_colored_matches_operator),
        ("ogf_matches_operator", _prop_ogf_matches_operator),
        ("egf_matches_operator", _prop_egf_matches_operator),
        ("riordan_closed_form", _prop_riordan_closed_form),
        ("riordan_action", _prop_riordan_action),
    ),
}

SUITE_NAMES = (*_SUITES, "all")


def run_suite(
    suite: str, seed: int = 0, cases: int = 100, depth: int = 20
) -> SuiteReport:
    """Run one named suite (or ``"all"``) and return its report.

    The RNG is seeded once and shared by the properties in order, so a
    (suite, seed, cases, depth) tuple always produces the same report.
    """
    if suite == "all":
        selected = list(_SUITES)
        qualify = True
    elif suite in _SUITES:
        selected = [suite]
        qualify = False
    else:
        raise ValueError(f"unknown suite {suite!r}; known: {', '.join(SUITE_NAMES)}")
    if cases < 1:
        raise ValueError("cases must be positive")
    if depth < 1:
        raise ValueError("depth must be positive")
    rng = random.Random(seed)
    results = []
    for name in selected:
        for prop_name, fn in _SUITES[name]:
            label = f"{name}.{prop_name}" if qualify else prop_name
            ran, failure = fn(rng, cases, depth)
            results.append(PropertyResult(label, ran, failure is None, failure))
    return SuiteReport(suite, seed, cases, results)
