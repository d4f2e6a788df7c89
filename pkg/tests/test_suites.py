import random

import pytest

from finpres import relcore as rc, suites, urysohn


def test_result_line_and_json():
    r = suites.SuiteResult("demo", True, 3, 10, seconds=1.5)
    assert r.line() == "PASS demo: 3 checks in 1.50s (limit 10s)"
    assert r.line(timings=False) == "PASS demo: 3 checks"
    assert "seconds" not in r.to_json() and r.to_json(True)["seconds"] == 1.5
    slow = suites.SuiteResult("demo", True, 3, 1, seconds=2)
    assert slow.line().startswith("FAIL")


def test_unknown_suite():
    with pytest.raises(KeyError):
        suites.run_suite("nope")


def test_crash_becomes_failure(monkeypatch):
    def boom(seed):
        raise ValueError("broken")

    monkeypatch.setitem(suites.SUITES, "gaps", boom)
    res = suites.run_suite("gaps")
    assert not res.passed and "broken" in res.counterexample and res.limit == 60


def test_gap_oracle_examples():
    assert suites.brute_gap(frozenset({"00", "01"}), frozenset({"0"}), 2)
    assert not suites.brute_gap(frozenset({"000", "01"}), frozenset({"0"}), 3)


def test_walk_oracle_matches_known_cycles():
    ref = suites._walk_oracle(list(range(5)), [(i, (i + 1) % 5) for i in range(5)])
    assert ref[(0, 1)] == (4, 1) and ref[(0, 2)] == (2, 3)


def test_random_connected_graph_is_connected():
    rng = random.Random(0)
    for _ in range(20):
        verts, edges = suites.random_connected_graph(rng, rng.randint(1, 8), 0.2)
        assert rc.is_connected(rc.graph(verts, edges))


def test_brute_dual_of_three_arc_path():
    pool = suites.lifts.enumerate_structures((2,), 3)
    D = suites.brute_dual([rc.path(3, directed=True)], 3, 3, pool)
    assert rc.hom_equivalent(D, suites.transitive_tournament(3))


def test_g5_slices_avoid_short_odd_cycles():
    S = suites.g5_slice(random.Random(1), rounds=10, cap=10)
    assert urysohn.in_odd_girth_class(S, 5)
    ok, _ = suites._slice_graph_ok(S)
    assert ok
