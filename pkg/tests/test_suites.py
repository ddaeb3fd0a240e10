"""Suite driver semantics: instance counts, determinism, failure ordering."""

import pytest

from bockstein.suites import (
    SUITE_ORDER,
    _Instance,
    _SUITES,
    default_trials,
    run_all,
    run_suite,
)

EXPECTED_ORDER = (
    "def-consistency",
    "sigma-union",
    "sigma-subset-central",
    "ntd-epi",
    "ab-sigma",
    "pdiv-extension",
    "homology-corollaries",
    "zl-zhat",
    "profile-rules",
)

EXPECTED_DEFAULTS = {
    "def-consistency": 200,
    "sigma-union": 50,
    "sigma-subset-central": 100,
    "ntd-epi": 100,
    "ab-sigma": 50,
    "pdiv-extension": 100,
    "homology-corollaries": None,
    "zl-zhat": 50,
    "profile-rules": 50,
}


def test_suite_order():
    assert SUITE_ORDER == EXPECTED_ORDER


def test_default_trials():
    for name in SUITE_ORDER:
        assert default_trials(name) == EXPECTED_DEFAULTS[name]


def test_trials_means_exactly_that_many_instances():
    for name in SUITE_ORDER:
        r = run_suite(name, trials=6)
        assert r.suite == name
        assert r.instances == 6
        assert r.ok and r.passed == 6, (name, r.failures[:3])


def test_homology_corollaries_exhaustive_default():
    r = run_suite("homology-corollaries")
    # the full sweep: every catalog entry at each prime in the small pool
    assert r.instances == 168
    assert r.ok
    capped = run_suite("homology-corollaries", trials=10)
    assert capped.instances == 10


def test_zero_trials():
    r = run_suite("sigma-union", trials=0)
    assert r.instances == 0 and r.ok and r.passed == 0


def test_deterministic_modulo_elapsed():
    a = run_suite("ntd-epi", trials=8, seed=3)
    b = run_suite("ntd-epi", trials=8, seed=3)
    assert (a.suite, a.instances, a.failures, a.seed) == \
        (b.suite, b.instances, b.failures, b.seed)


def test_unknown_suite_raises():
    with pytest.raises(KeyError):
        run_suite("bogus")


def test_run_all_covers_every_suite():
    results = run_all(trials=2)
    assert [r.suite for r in results] == list(SUITE_ORDER)
    assert all(r.ok and r.instances == 2 for r in results)


def test_failures_sorted_by_descriptor(monkeypatch):
    def shuffled(trials, seed):
        for tag in ("0007", "0002", "0005"):
            inst = _Instance(f"case #{tag}")
            inst.check_true(False, "fine", f"broken {tag}")
            yield inst

    monkeypatch.setitem(_SUITES, "fake", (shuffled, 3))
    r = run_suite("fake")
    assert not r.ok
    assert r.passed == 0
    assert [f.instance for f in r.failures] == \
        ["case #0002", "case #0005", "case #0007"]
    assert r.failures[0].expected == "fine"
    assert r.failures[0].actual == "broken 0002"


def test_instance_records_first_failure_only():
    inst = _Instance("x")
    inst.check(1, 1)
    assert inst.failure is None
    inst.check(2, 3)
    inst.check(4, 5)
    assert inst.failure == ("2", "3")
