"""The randomized self-check suites."""

import pytest

from binshift.verify import SUITE_NAMES, run_suite


def test_suite_names():
    assert SUITE_NAMES == ("semigroup", "rootshift", "identities", "models", "all")


@pytest.mark.parametrize("suite", SUITE_NAMES[:-1])
def test_each_suite_passes(suite):
    report = run_suite(suite, seed=7, cases=25, depth=12)
    assert report.ok
    assert report.suite == suite
    assert all(p.ok for p in report.properties)
    assert all(p.cases >= 1 for p in report.properties)


def test_all_runs_every_property():
    report = run_suite("all", seed=3, cases=10, depth=10)
    assert report.ok
    names = [p.name for p in report.properties]
    assert len(names) == len(set(names))
    prefixes = {name.split(".", 1)[0] for name in names}
    assert prefixes == {"semigroup", "rootshift", "identities", "models"}
    # every per-suite property appears under its qualified name
    for suite in SUITE_NAMES[:-1]:
        solo = run_suite(suite, seed=3, cases=10, depth=10)
        for prop in solo.properties:
            assert f"{suite}.{prop.name}" in names


def test_same_seed_same_report():
    a = run_suite("semigroup", seed=42, cases=30, depth=15)
    b = run_suite("semigroup", seed=42, cases=30, depth=15)
    assert a == b


def test_different_seeds_usually_differ():
    # Reports carry the seed, so they can never be equal; check the field.
    a = run_suite("rootshift", seed=1, cases=5, depth=8)
    b = run_suite("rootshift", seed=2, cases=5, depth=8)
    assert a.seed != b.seed
    assert a.ok and b.ok


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus")


def test_argument_validation():
    with pytest.raises(ValueError):
        run_suite("semigroup", cases=0)
    with pytest.raises(ValueError):
        run_suite("semigroup", depth=0)


def test_report_shape():
    report = run_suite("identities", seed=0, cases=8, depth=10)
    assert report.requested_cases == 8
    failures = [p.failure for p in report.properties if not p.ok]
    assert failures == []
