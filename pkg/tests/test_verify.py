"""The identity suites behind the `verify` command."""

import pytest

from dyckgen.verify import SUITE_NAMES, CheckResult, run_suites


def test_suite_names_cover_registry():
    assert SUITE_NAMES == ("determinants", "genfun", "duality",
                           "recursions", "cluster", "touchdown")


@pytest.mark.parametrize("name", SUITE_NAMES)
def test_each_suite_passes_at_small_bounds(name):
    results = run_suites([name], k_max=3, len_max=8)
    assert results, name
    bad = [r for r in results if not r.ok]
    assert not bad, bad[:3]
    for r in results:
        assert r.suite == name
        assert r.name
        assert r.params
        assert r.detail == ""


def test_run_all_suites_at_once():
    results = run_suites(SUITE_NAMES, k_max=2, len_max=6)
    seen = {r.suite for r in results}
    assert seen == set(SUITE_NAMES)
    assert all(r.ok for r in results)


def test_default_bounds_pass():
    # the duality suite is the cheapest at its default bounds
    results = run_suites(["duality"])
    assert len(results) == sum((k + 1) * (k + 2) // 2 for k in range(6))
    assert all(r.ok for r in results)


def test_result_fields_are_frozen():
    r = CheckResult("s", "n", "p", True)
    with pytest.raises(AttributeError):
        r.ok = False


def test_unknown_suite_name_raises():
    with pytest.raises(KeyError):
        run_suites(["spectra"])
