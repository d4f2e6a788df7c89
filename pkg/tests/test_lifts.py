import random

import pytest

from finpres import lifts as lf, relcore as rc
from finpres.lifts import Family, Lift, LiftError
from finpres.relcore import RelStructure, complete, cycle, graph, make_structure, path

C5 = Family([cycle(5)])


def two_path_piece():
    return next(i for i, P in enumerate(C5.pieces) if len(P.structure) == 3)


def three_path_piece():
    return next(i for i, P in enumerate(C5.pieces) if len(P.structure) == 4)


def all_small_lifts(n):
    V = list(range(n))
    slots = [(u, v) for u in V for v in V if u < v]
    ext = [(i, (u, v)) for i in range(2) for u in V for v in V]
    for em in range(1 << len(slots)):
        E = set()
        for b, (u, v) in enumerate(slots):
            if em >> b & 1:
                E |= {(u, v), (v, u)}
        shadow = RelStructure((2,), tuple(V), (frozenset(E),))
        for xm in range(1 << len(ext)):
            X = [set(), set()]
            for b, (i, t) in enumerate(ext):
                if xm >> b & 1:
                    X[i].add(t)
            yield Lift(shadow, (frozenset(X[0]), frozenset(X[1])))


def test_c5_pieces():
    pieces = C5.pieces
    assert len(pieces) == 2
    assert sorted(len(P.structure) for P in pieces) == [3, 4]
    for P in pieces:
        assert P.arity == 2
        a, b = P.roots
        assert not rc.edges_of(P.structure) & {frozenset((a, b))}
    assert lf.pieces_of([complete(3)]) == ()


def test_tree_pieces_have_single_roots():
    assert all(P.arity == 1 for P in lf.pieces_of([path(3, directed=True)]))


def test_family_validation():
    with pytest.raises(LiftError):
        Family([])
    with pytest.raises(LiftError):
        Family([graph(range(3), [(0, 1)])])


def test_canonical_lift_examples():
    L = lf.canonical_lift(path(2), C5)
    assert (0, 2) in L.extended[two_path_piece()]
    one = lf.canonical_lift(graph([0], []), C5)
    assert one.num_extended() == 0
    empty = lf.canonical_lift(rc.empty_structure((2,)), C5)
    assert len(empty) == 0 and empty.num_extended() == 0


def test_universal_witness_examples():
    shadow = graph([0, 1], [])
    assert rc.is_isomorphic(lf.universal_witness(lf.empty_lift(C5, shadow), C5), shadow)
    i = two_path_piece()
    ext = [frozenset(), frozenset()]
    ext[i] = frozenset({(0, 1)})
    W = lf.universal_witness(Lift(shadow, tuple(ext)), C5)
    assert len(W) == 3 and len(rc.edges_of(W)) == 2
    ext[i] = frozenset({(0, 1), (1, 0)})
    W = lf.universal_witness(Lift(shadow, tuple(ext)), C5)
    assert len(W) == 4 and len(rc.edges_of(W)) == 4


def test_membership_examples():
    shadow = graph([0, 1], [])
    assert lf.lift_membership(lf.empty_lift(C5, shadow), C5)
    c5 = lf.canonical_lift(cycle(5), C5)
    assert not lf.lift_membership(c5, C5)
    ext = [frozenset(), frozenset()]
    ext[two_path_piece()] = frozenset({(0, 1)})
    ext[three_path_piece()] = frozenset({(0, 1)})
    ok, why = lf.lift_membership(Lift(shadow, tuple(ext)), C5, explain=True)
    assert not ok and "member" in why


def test_membership_explains_extra_tuples():
    shadow = graph([0, 1], [(0, 1)])
    ext = [frozenset(), frozenset()]
    ok, why = lf.lift_membership(Lift(shadow, tuple(ext)), C5, explain=True)
    assert not ok and "also reaches" in why


def test_canonical_lifts_of_free_graphs_are_members():
    rng = random.Random(1)
    for _ in range(20):
        A = lf.random_forb_graph(C5, rng, rng.randint(1, 6))
        L = lf.canonical_lift(A, C5)
        xs = rng.sample(list(A.vertices), rng.randint(1, len(A)))
        assert lf.lift_membership(L.induced(xs), C5)


def test_amalgam_examples():
    rng = random.Random(2)
    A = lf.random_forb_graph(C5, rng, 4)
    X = lf.canonical_lift(A, C5)
    Z = X.induced([])
    Y = X.relabel({v: ("y", v) for v in X.vertices})
    J = lf.lift_amalgam(X, Y, Z, C5)
    assert len(J) == 2 * len(X)
    assert lf.same_lift(lf.lift_amalgam(X, X, X, C5), X)
    with pytest.raises(LiftError):
        lf.lift_amalgam(X, X, Z, C5)


def test_random_amalgams():
    rng = random.Random(3)
    for _ in range(25):
        X, Y, Z = lf.random_lift_triple(C5, rng)
        V = lf.lift_amalgam(X, Y, Z, C5)
        assert lf.same_lift(V.induced(X.vertices), X)
        assert lf.same_lift(V.induced(Y.vertices), Y)
        assert lf.lift_membership(V, C5)


def test_forbidden_lifts_match_membership_on_small_lifts():
    Fp = lf.forbidden_lifts(C5)
    for n in (1, 2):
        for X in all_small_lifts(n):
            assert lf.lift_membership(X, C5) == lf.avoids_forbidden(X, Fp, C5), X


def test_forbidden_lifts_of_c5_include_the_one_vertex_pattern():
    Fp = lf.forbidden_lifts(C5)
    i, j = two_path_piece(), three_path_piece()
    ext = [frozenset(), frozenset()]
    ext[i] = ext[j] = frozenset({(0, 0)})
    X = Lift(graph([0], []), tuple(ext))
    assert not lf.avoids_forbidden(X, Fp, C5)
    assert not lf.lift_membership(X, C5)


def test_forbidden_lifts_without_pieces():
    Fp = lf.forbidden_lifts([complete(3)])
    # K3 and its two proper homomorphic images, all without piece relations
    assert len(Fp) == 3
    assert any(rc.is_isomorphic(T.lift.shadow, complete(3)) for T in Fp)
    for T in Fp:
        assert T.lift.extended == () and T.negative is None
        assert rc.hom_exists(complete(3), T.lift.shadow)


def test_bound_is_reported():
    with pytest.raises(lf.BoundExceeded):
        lf.forbidden_lifts(C5, max_templates=10)


def test_tree_duals():
    P2 = path(2, directed=True)
    D = lf.tree_dual([P2])
    assert lf.duality_check([P2], D, 4)
    assert rc.hom_equivalent(D, path(1, directed=True))
    P3 = path(3, directed=True)
    TT3 = graph(range(3), [(0, 1), (0, 2), (1, 2)], directed=True)
    assert rc.hom_equivalent(lf.tree_dual([P3]), TT3)
    with pytest.raises(LiftError):
        lf.tree_dual([cycle(3, directed=True)])


def test_duality_check_examples():
    bad = lf.duality_counterexample([cycle(5)], path(1), 3)
    assert bad is not None
    assert not rc.hom_exists(cycle(5), bad) and not rc.hom_exists(bad, path(1))
    # among symmetric graphs the first witness is C7: C5-free, not bipartite
    assert not rc.hom_exists(cycle(5), cycle(7)) and not rc.hom_exists(cycle(7), path(1))
    anything = make_structure((2,), [0], [(0, (0, 0))])
    assert lf.duality_check([graph([0, 1], [(0, 1)], directed=True)], graph([0], []), 3)
    assert not lf.duality_check([graph([0, 1], [(0, 1)], directed=True)], anything, 2)


def test_enumerate_structures_counts():
    # digraphs with loops up to isomorphism on at most 2 vertices: 1 + 2 + 10
    assert len(lf.enumerate_structures((2,), 2)) == 13


def test_arity_criteria():
    assert lf.min_lift_arity(C5) == 2
    assert not lf.cut_irreducibility(C5)
    T = path(3, directed=True)
    assert lf.min_lift_arity([T]) == 1 and lf.cut_irreducibility([T])
    K4e = graph(range(4), [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
    assert lf.min_lift_arity([K4e]) == 2
    assert lf.cut_irreducibility([K4e])


def test_generic_slice_is_a_member():
    S = lf.generic_slice(C5, rounds=10, seed=4, target=12)
    assert lf.is_forb_h(S.shadow, C5)
    assert lf.lift_membership(S, C5)
