import itertools
import random

import pytest
from hypothesis import given, strategies as st

from finpres import relcore as rc
from finpres.relcore import (
    RelStructure, StructureError, complete, cycle, graph, make_structure, path, petersen,
)


def brute_hom(A, B, injective=False):
    for img in itertools.product(B.vertices, repeat=len(A)):
        if injective and len(set(img)) < len(img):
            continue
        f = dict(zip(A.vertices, img))
        if rc.is_homomorphism(A, B, f):
            return True
    return False


@st.composite
def digraphs(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    arcs = draw(st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)), max_size=n * n))
    return graph(range(n), arcs, directed=True)


def test_structure_rejects_bad_input():
    with pytest.raises(StructureError):
        RelStructure((2,), (0, 1), (frozenset({(0, 2)}),))
    with pytest.raises(StructureError):
        RelStructure((2,), (0, 0), (frozenset(),))
    with pytest.raises(StructureError):
        RelStructure((), (), ())
    with pytest.raises(StructureError):
        RelStructure((2,), (0, 1), (frozenset({(0, 1, 1)}),))


def test_hom_basic():
    assert rc.hom_exists(cycle(5), complete(3))
    assert not rc.hom_exists(complete(3), path(1))
    assert rc.hom_exists(path(4), path(1))
    assert not rc.hom_exists(cycle(5), path(1))
    assert rc.find_embedding(cycle(5), petersen()) is not None
    assert rc.find_embedding(complete(3), petersen(), induced=False) is None


@given(digraphs(), digraphs())
def test_hom_matches_brute_force(A, B):
    assert rc.hom_exists(A, B) == brute_hom(A, B)


@given(digraphs(3), digraphs(4))
def test_injective_matches_brute_force(A, B):
    found = rc.all_homomorphisms(A, B, injective=True, limit=1)
    assert bool(found) == brute_hom(A, B, injective=True)


@given(digraphs(), digraphs())
def test_found_map_is_homomorphism(A, B):
    f = rc.find_homomorphism(A, B)
    if f is not None:
        assert rc.is_homomorphism(A, B, f)


def test_isomorphism_examples():
    rng = random.Random(3)
    perm = list(range(5))
    rng.shuffle(perm)
    assert rc.is_isomorphic(cycle(5), cycle(5).relabel(dict(enumerate(perm))))
    assert not rc.is_isomorphic(cycle(5), path(4))
    for _ in range(2):
        p = list(range(10))
        rng.shuffle(p)
        q = list(range(10))
        rng.shuffle(q)
        P = petersen()
        assert rc.is_isomorphic(P.relabel(dict(enumerate(p))), P.relabel(dict(enumerate(q))))


@given(digraphs(5), st.randoms(use_true_random=False))
def test_canonical_form_is_label_invariant(G, r):
    p = list(G.vertices)
    r.shuffle(p)
    H = G.relabel(dict(zip(G.vertices, p)))
    assert rc.canonical_form(G)[0] == rc.canonical_form(H)[0]
    assert rc.is_isomorphic(G, H)


def test_gaifman():
    t = make_structure((3,), "abc", [(0, ("a", "b", "c"))])
    assert rc.edges_of(rc.gaifman(t)) == {frozenset("ab"), frozenset("bc"), frozenset("ac")}
    assert rc.edges_of(rc.gaifman(make_structure((2,), "ab", []))) == set()
    assert rc.is_isomorphic(rc.gaifman(cycle(5)), cycle(5))


def test_components():
    two = graph(range(4), [(0, 1), (2, 3)])
    assert len(rc.connected_components(two)) == 2
    assert len(rc.connected_components(cycle(5))) == 1
    assert rc.connected_components(rc.empty_structure((2,))) == []


def test_minimal_cuts_examples():
    cuts = rc.minimal_cuts(cycle(5))
    assert len(cuts) == 5
    assert all(len(c) == 2 and frozenset(c) not in rc.edges_of(cycle(5)) for c in cuts)
    assert rc.minimal_cuts(graph("abc", [("a", "b"), ("b", "c")])) == [frozenset("b")]
    assert rc.minimal_cuts(complete(4)) == []


def test_minimal_cuts_need_connected():
    with pytest.raises(StructureError):
        rc.minimal_cuts(graph(range(3), [(0, 1)]))


@given(digraphs(6))
def test_minimal_cuts_form_an_antichain(G):
    if len(G) < 2 or not rc.is_connected(G):
        return
    cuts = rc.minimal_cuts(G)
    for c in cuts:
        assert rc.is_cut(G, c)
        for d in cuts:
            assert not (d < c)
        for v in c:
            assert not rc.is_cut(G, c - {v}) or len(c) == 1


def test_trees_and_irreducible():
    assert rc.is_relational_tree(path(2, directed=True))
    assert not rc.is_relational_tree(cycle(3))
    assert rc.is_relational_tree(make_structure((3,), "abc", [(0, ("a", "b", "c"))]))
    assert rc.is_irreducible(complete(3))
    assert not rc.is_irreducible(path(2))
    assert rc.is_irreducible(make_structure((3,), "abc", [(0, ("a", "b", "c"))]))


def test_free_amalgam_examples():
    e1 = graph("xy", [("x", "y")])
    e2 = graph("yz", [("y", "z")])
    C = graph("y", [])
    D, _, _ = rc.free_amalgam(e1, e2, C, {"y": "y"}, {"y": "y"})
    assert rc.is_isomorphic(D, path(2))
    D, _, _ = rc.free_amalgam(cycle(5), cycle(5), cycle(5), {i: i for i in range(5)}, {i: i for i in range(5)})
    assert rc.is_isomorphic(D, cycle(5))


def test_two_c5_glued_on_non_edge():
    C = graph((0, 2), [])
    D, fa, fb = rc.free_amalgam(cycle(5), cycle(5), C, {0: 0, 2: 2}, {0: 0, 2: 2})
    assert len(D) == 8
    assert len(rc.edges_of(D)) == 10
    assert not rc.is_irreducible(D)
    assert frozenset({fa[0], fa[2]}) in rc.minimal_cuts(D)


def test_free_amalgam_rejects_non_embedding():
    with pytest.raises(StructureError):
        rc.free_amalgam(path(1), path(1), graph((0, 1), []), {0: 0, 1: 1}, {0: 0, 1: 1})


def test_indicator_examples():
    I, a, b = rc.SHIPPED_INDICATOR
    single = rc.indicator_product(graph("uv", [("u", "v")], directed=True), I, a, b)
    assert len(single) == len(I)
    assert rc.is_isomorphic(single, I)
    two = rc.indicator_product(path(2, directed=True), I, a, b)
    assert len(two) == 2 * len(I) - 1
    empty = rc.indicator_product(graph("uv", [], directed=True), I, a, b)
    assert len(empty) == 0


def test_shipped_indicator_core_is_rigid():
    I, _, _ = rc.SHIPPED_INDICATOR
    assert rc.is_rigid(I.induced(range(11)))


def test_indicator_preserves_and_reflects_sampled():
    I, a, b = rc.SHIPPED_INDICATOR
    graphs = [
        path(1, directed=True), path(2, directed=True), cycle(3, directed=True),
        graph(range(3), [(0, 1), (0, 2)], directed=True),
        graph(range(3), [(0, 1), (1, 0), (1, 2)], directed=True),
    ]
    for G, H in itertools.product(graphs, repeat=2):
        want = rc.hom_exists(G, H)
        assert rc.hom_exists(rc.indicator_product(G, I, a, b), rc.indicator_product(H, I, a, b)) == want


def test_rigid_and_core():
    assert rc.is_core(complete(3)) and not rc.is_rigid(complete(3))
    assert rc.is_rigid(graph([0], []))
    assert not rc.is_core(path(3))
    assert rc.is_isomorphic(rc.core_of(path(3)), path(1))
    assert rc.is_isomorphic(rc.core_of(cycle(6)), path(1))


def test_asymmetric_eight_vertex_rigid_graph():
    # Found by search; the identity is its only endomorphism.
    G = graph(range(8), [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 2),
                         (2, 4), (4, 0), (1, 6), (6, 7), (7, 3)], directed=True)
    assert rc.is_rigid(G) == (len(rc.endomorphisms(G)) == 1)


def _nx(G):
    import networkx as nx

    D = nx.DiGraph()
    D.add_nodes_from(G.vertices)
    D.add_edges_from(G.relations[0])
    return D


@given(digraphs(5), digraphs(5))
def test_isomorphism_matches_networkx(A, B):
    import networkx as nx

    assert rc.is_isomorphic(A, B) == nx.is_isomorphic(_nx(A), _nx(B))


@given(digraphs(6))
def test_components_match_networkx(G):
    import networkx as nx

    want = {frozenset(c) for c in nx.weakly_connected_components(_nx(G))}
    assert {frozenset(c) for c in rc.connected_components(G)} == want


@given(digraphs(6))
def test_minimal_cuts_against_subset_search(G):
    import networkx as nx

    if len(G) < 2 or not rc.is_connected(G):
        return
    U = _nx(G).to_undirected()

    def cuts(S):
        H = U.subgraph([v for v in U if v not in S])
        return len(H) > 0 and not nx.is_connected(H)

    every = [frozenset(S) for k in range(1, len(G)) for S in itertools.combinations(G.vertices, k) if cuts(S)]
    want = {S for S in every if not any(T < S for T in every)}
    assert set(rc.minimal_cuts(G)) == want
