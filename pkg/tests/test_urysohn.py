import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from finpres import urysohn as ur
from finpres.relcore import cycle, edges_of, graph
from finpres.suites import random_metric_space
from finpres.urysohn import (
    EMPTY_TRIPLET, OMEGA, CompleteTriplet, EvenOddPair as P, MetricError, Triplet,
)

FIG_POINTS = ("min", "a", "b", "c", "max")
FIG_DIST = {
    ("min", "a"): 1, ("min", "b"): 3, ("min", "c"): 2, ("min", "max"): 6,
    ("a", "b"): 2, ("a", "c"): 1, ("a", "max"): 5,
    ("b", "c"): 3, ("b", "max"): 3, ("c", "max"): 5,
}
# a sits below b and c; b and c are incomparable with witness a
FIG_ORDER = frozenset({("min", x) for x in FIG_POINTS[1:]} | {(x, "max") for x in "abc"} | {("a", "b"), ("a", "c")})


def rand_space(r, n):
    return ur.metric_space(*random_metric_space(r, n))


def figure_complete():
    a = CompleteTriplet([(EMPTY_TRIPLET, 1)])
    b = CompleteTriplet([(EMPTY_TRIPLET, 3), (a, 2)])
    c = CompleteTriplet([(EMPTY_TRIPLET, 2), (a, 1)])
    top = CompleteTriplet([(EMPTY_TRIPLET, 6), (a, 5), (b, 3), (c, 5)])
    return top, {"min": EMPTY_TRIPLET, "a": a, "b": b, "c": c, "max": top}


def test_figure_triplet_is_valid():
    assert ur.triplet_validate(Triplet(FIG_POINTS, FIG_ORDER, FIG_DIST)).ok


def test_figure_complete_triplet():
    top, names = figure_complete()
    assert ur.triplet_validate(top).ok
    assert ur.is_complete_triplet(top)
    for (x, y), q in FIG_DIST.items():
        assert ur.triplet_distance(names[x], names[y]) == q
    assert ur.distance_with_provenance(names["b"], names["c"]) == (3, "witness", names["a"])


def test_one_point_and_improper_triplets():
    assert ur.triplet_validate(EMPTY_TRIPLET).ok
    bad = Triplet(("m", "x", "y", "M"),
                  frozenset({("m", "x"), ("m", "y"), ("m", "M"), ("x", "M"), ("y", "M")}),
                  {("m", "x"): 1, ("m", "y"): 1, ("x", "y"): 2, ("m", "M"): 2, ("x", "M"): 1, ("y", "M"): 1})
    rep = ur.triplet_validate(bad)
    assert not rep.ok
    assert "proper" in {c for c, _ in rep.failures}


def test_triplet_constructor_errors():
    with pytest.raises(MetricError):
        CompleteTriplet([(EMPTY_TRIPLET, 0)])
    with pytest.raises(MetricError):
        CompleteTriplet([(EMPTY_TRIPLET, 0.5)])
    assert CompleteTriplet([(EMPTY_TRIPLET, "1/2")]) is CompleteTriplet([(EMPTY_TRIPLET, F(1, 2))])


def test_embedding_examples():
    X = ur.metric_space(["p", "q"], {("p", "q"): 1})
    img = ur.embed_metric(X)
    assert ur.triplet_distance(img["p"], img["q"]) == 1
    one = ur.embed_metric(ur.metric_space(["p"], {}))
    assert one["p"] is EMPTY_TRIPLET and ur.triplet_validate(one["p"]).ok
    with pytest.raises(MetricError):
        ur.metric_space("xyz", {("x", "y"): 1, ("y", "z"): 1, ("x", "z"): 3})


@given(st.integers(1, 6), st.integers(0, 10 ** 6))
def test_embedding_is_isometric(n, seed):
    X = rand_space(random.Random(seed), n)
    img = ur.embed_metric(X)
    for x, y in itertools.combinations(X.points, 2):
        assert ur.triplet_distance(img[x], img[y]) == X.d(x, y)
    for t in img.values():
        assert ur.is_complete_triplet(t)


@given(st.integers(0, 10 ** 6))
def test_metric_axioms_on_embedded_points(seed):
    X = rand_space(random.Random(seed), 5)
    pts = list(ur.embed_metric(X).values())
    for A, B, C in itertools.product(pts, repeat=3):
        d = ur.triplet_distance
        assert d(A, C) <= d(A, B) + d(B, C)
        assert d(A, B) == d(B, A)
        assert (d(A, B) == 0) == (A is B)


def test_katetov_examples():
    A = EMPTY_TRIPLET
    B = CompleteTriplet([(A, 2)])
    assert ur.katetov_validate([A], {A: 7})
    assert not ur.katetov_validate([A, B], {A: 1, B: 5})
    M = ur.extend([A], {A: 1})
    assert len(M) == 2 and ur.triplet_distance(M, A) == 1
    with pytest.raises(MetricError):
        ur.extend([A, B], {A: 1, B: 5})


@given(st.integers(2, 5), st.integers(0, 10 ** 6))
def test_extension_realises_katetov_functions(n, seed):
    r = random.Random(seed)
    X = rand_space(r, n + 1)
    img = ur.embed_metric(X)
    *old, new = X.points
    D = {img[x]: X.d(x, new) for x in old}
    M = ur.extend([img[x] for x in old], D)
    for A, q in D.items():
        assert ur.triplet_distance(M, A) == q
    assert ur.is_complete_triplet(M)
    # a second extension keeps the first one's distances
    D2 = dict(D)
    D2[M] = F(1, 2)
    if ur.katetov_validate(list(D2), D2):
        M2 = ur.extend(list(D2), D2)
        assert all(ur.triplet_distance(M2, A) == q for A, q in D2.items())


def test_json_round_trip():
    top, _ = figure_complete()
    assert ur.triplet_from_json(ur.triplet_to_json(top)) is top
    with pytest.raises(MetricError):
        ur.triplet_from_json({"nodes": [[[3, "1"]]], "root": 0})


def test_even_odd_arithmetic():
    zero = P(0, OMEGA)
    assert zero + P(2, 3) == P(2, 3)
    assert P(2, 1) + P(2, 1) == P(2, 3)
    assert P(4, 1) + P(4, 1) == P(2, 5)
    assert P(2, 3) <= P(4, 3) and not P(4, 3) <= P(2, 3)
    with pytest.raises(ValueError):
        P(1, 2)


def test_even_odd_of_graphs():
    c5 = ur.eo_of_graph(range(5), edges_of_list(cycle(5)))
    assert c5.d(0, 1) == P(4, 1)
    assert c5.d(0, 2) == P(2, 3)
    k2 = ur.eo_of_graph([0, 1], [(0, 1)])
    assert k2.d(0, 1) == P(OMEGA, 1)
    assert k2.d(0, 0) == P(0, OMEGA)
    assert ur.is_even_odd_space(c5) and ur.is_even_odd_space(k2)


def edges_of_list(G):
    return [tuple(e) for e in edges_of(G)]


@given(st.integers(1, 7), st.integers(0, 10 ** 6))
def test_graph_spaces_satisfy_axioms(n, seed):
    r = random.Random(seed)
    E = [(u, v) for u, v in itertools.combinations(range(n), 2) if r.random() < 0.4]
    assert ur.is_even_odd_space(ur.eo_of_graph(range(n), E))


def test_amalgam_examples():
    A = ur.eo_of_graph(["x", "s"], [("x", "s")])
    B = ur.eo_of_graph(["s", "y"], [("s", "y")])
    AB = ur.eo_amalgam(A, B)
    assert AB.d("x", "y") == P(2, OMEGA)
    assert ur.eo_amalgam(A, A).table == A.table
    c5 = ur.eo_of_graph(range(5), edges_of_list(cycle(5)))
    other = ur.eo_of_graph([0, 1, 5, 6, 7], [(0, 1), (1, 5), (5, 6), (6, 7), (7, 0)])
    glued = ur.eo_amalgam(c5, other)
    assert ur.is_even_odd_space(glued)
    with pytest.raises(ur.EvenOddError):
        ur.eo_amalgam(c5, ur.eo_of_graph([0, 1], []))


def test_forbidden_cycle_graph():
    c7 = ur.eo_of_graph(range(7), edges_of_list(cycle(7)))
    got = graph(range(7), ur.forb_cycle_graph(c7, 5))
    assert edges_of(got) == edges_of(cycle(7))
    assert ur.forb_cycle_graph(ur.eo_of_graph([0], []), 5) == []
    with pytest.raises(ur.EvenOddError):
        ur.forb_cycle_graph(ur.eo_of_graph(range(5), edges_of_list(cycle(5))), 5)
    with pytest.raises(ur.EvenOddError):
        ur.forb_cycle_graph(c7, 4)


def test_extend_rejects_shortcuts():
    c7 = ur.eo_of_graph(range(7), edges_of_list(cycle(7)))
    with pytest.raises(ur.EvenOddError):
        ur.eo_extend(c7, "n", {0: P(OMEGA, 1), 3: P(OMEGA, 1)})
