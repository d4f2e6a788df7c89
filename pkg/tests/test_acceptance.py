"""One test per acceptance criterion; each prints a single PASS/FAIL line.

Limits are pinned here, independently of the suite defaults.
"""

import time

import pytest

from finpres import suites

SEED = 0

pytestmark = pytest.mark.slow


def _run(name, limit):
    t0 = time.perf_counter()
    res = suites.run_suite(name, SEED)
    elapsed = time.perf_counter() - t0
    ok = res.passed and elapsed < limit
    extra = f" counterexample: {res.counterexample}" if res.counterexample else ""
    print(f"{'PASS' if ok else 'FAIL'} criterion {name}: {res.checked} checks in {elapsed:.2f}s "
          f"(limit {limit}s){extra}")
    assert res.passed, res.counterexample
    assert elapsed < limit, f"{elapsed:.1f}s over the {limit}s limit"
    return res


def test_criterion_01_extension_property():
    res = _run("extension", 60)
    req = res.notes["requests"]
    for kind in ("rado", "K3-free", "K4-free", "directed", "oriented", "tournament_N", "poset", "urysohn"):
        assert req[kind] >= 200, kind


def test_criterion_02_poset_embeddings():
    res = _run("poset-embedding", 120)
    # partial orders on 0..6 points up to isomorphism: 1+1+2+5+16+63+318
    assert res.notes["posets"] == 405


def test_criterion_03_representations_agree():
    res = _run("representations", 120)
    assert res.notes["pairs"] == 2000
    assert 0 < res.notes["comparable"] < 2000


def test_criterion_04_periodic_path_images():
    res = _run("path-homs", 600)
    assert res.notes["longest path (vertices)"] == 8
    # all periodic sets of periods 1, 2 and 4: 2 + 4 + 16 = 22, all ordered pairs
    assert res.notes["periodic pairs"] == 22 * 22


def test_criterion_05_urysohn_metric():
    res = _run("urysohn", 120)
    assert res.notes == {"triangles": 1000, "isometries": 100, "extensions": 100}


def test_criterion_06_lift_amalgamation():
    res = _run("lift-amalgamation", 300)
    assert res.notes["triples"] == {"C5": 200, "C3,C5": 200}


def test_criterion_07_tree_duality():
    res = _run("tree-duality", 600)
    # oriented trees on 1..4 vertices up to isomorphism: 1 + 1 + 3 + 8
    assert res.notes["trees"] == 13


def test_criterion_08_gap_characterisation():
    res = _run("gaps", 60)
    assert res.notes["gaps"] > 0


def test_criterion_09_even_odd_spaces():
    res = _run("even-odd", 120)
    assert res.notes["graphs"] == 200
    assert all(n >= 8 for n in res.notes["slice sizes"])


def test_criterion_10_zigzag():
    res = _run("zigzag", 30)
    assert res.notes["vertices"] >= 8


@pytest.mark.parametrize("name", ["extension", "poset-embedding", "path-homs", "urysohn", "gaps", "even-odd", "zigzag"])
def test_suite_reports_are_deterministic(name):
    a = suites.run_suite(name, 11).to_json()
    b = suites.run_suite(name, 11).to_json()
    assert a == b
