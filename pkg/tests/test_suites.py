"""Suite runner plumbing: determinism, profiles, parallel equivalence."""
import json
import random

import pytest

from dunkl_hermite.suites import (CI, DESK, PROFILES, SUITE_NAMES, draw_kappas, group_cases,
                                  max_workers, run_suite)


def test_profiles_registered():
    assert PROFILES == {"desk": DESK, "ci": CI}
    assert DESK.max_deg == 6 and DESK.clifford_deg == 5
    assert CI.max_deg < DESK.max_deg


def test_draws_are_deterministic():
    a = draw_kappas(random.Random(7), 4)
    b = draw_kappas(random.Random(7), 4)
    assert a == b
    assert all(0 <= k <= 3 for k in a)


def test_group_cases_include_kappa_zero_first():
    cases = group_cases((("z2^2", "z2", 2, 2),), seed=7, draws=2)
    assert len(cases) == 3
    assert all(k == 0 for k in cases[0].kappas)
    assert cases[1].kappas != cases[2].kappas


def test_unknown_suite_name():
    with pytest.raises(ValueError):
        run_suite("nonsense", CI, 7)


def test_suite_verdict_shape_and_seed_stability():
    v1 = run_suite("commute", CI, 7)
    v2 = run_suite("commute", CI, 7)
    assert v1.ok
    assert json.dumps(v1.to_json()) == json.dumps(v2.to_json())
    data = v1.to_json()
    assert set(data) == {"suite", "cases", "failures"}
    timed = v1.to_json(include_timing=True)
    assert "wall_time_ms" in timed


def test_thread_pool_gives_identical_results(monkeypatch):
    serial = run_suite("sl2", CI, 7)
    monkeypatch.setenv("DUNKL_NUM_THREADS", "4")
    assert max_workers() == 4
    parallel = run_suite("sl2", CI, 7)
    assert json.dumps(serial.to_json()) == json.dumps(parallel.to_json())


def test_bad_thread_env_falls_back_to_serial(monkeypatch):
    monkeypatch.setenv("DUNKL_NUM_THREADS", "not-a-number")
    assert max_workers() == 1


def test_all_suite_names_have_runners():
    from dunkl_hermite.suites import SUITE_RUNNERS
    assert set(SUITE_NAMES) == set(SUITE_RUNNERS)
