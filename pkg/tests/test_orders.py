import itertools
import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from finpres import orders as od
from finpres.orders import OrderError, PeriodicSet

words = st.text(alphabet="01", max_size=5)


@st.composite
def antichains(draw, max_len=4):
    return od.min_antichain(draw(st.sets(st.text(alphabet="01", max_size=max_len), max_size=5)))


def cone(A, depth=6):
    """Words of length ``depth`` with a prefix in A."""
    return {"".join(b) for b in itertools.product("01", repeat=depth) if any("".join(b).startswith(w) for w in A)}


def test_word_order_examples():
    assert od.word_leq("011000", "011")
    assert not od.word_leq("010111", "011")
    assert od.min_antichain({"0", "00", "10"}) == {"0", "10"}
    assert od.antichain_leq({"00", "01"}, {"0"})
    assert not od.antichain_lt({"0"}, {"0"})


@given(antichains(), antichains())
def test_antichain_order_is_cone_inclusion(A, B):
    assert od.antichain_leq(A, B) == (cone(A) <= cone(B))


def test_psi_small_prefixes():
    images = od.psi((2, {(1, 2)}))
    assert images == [{"0"}, {"0", "10"}]


def test_psi_prime_small_prefixes():
    assert od.psi_prime((2, {(1, 2)})) == [{(1,)}, {(1,), (0, 1)}]


def test_psi_rejects_non_orders():
    with pytest.raises(OrderError):
        od.psi((2, {(1, 2), (2, 1)}))


def test_chains_and_antichains_of_three():
    chain = od.psi_prime((3, {(1, 2), (2, 3), (1, 3)}))
    for a, b in itertools.combinations(chain, 2):
        assert od.tvset_leq(a, b)
    flat = od.psi_prime((3, set()))
    for a, b in itertools.permutations(flat, 2):
        assert not od.tvset_leq(a, b)


@given(st.integers(1, 5), st.data())
def test_psi_is_an_embedding(n, data):
    rel = data.draw(st.sampled_from(od.enumerate_posets(n)))
    leq = lambda a, b: a == b or (a, b) in rel
    for maps, cmp in ((od.psi, od.antichain_leq), (od.psi_prime, od.tvset_leq)):
        imgs = maps((n, rel))
        for i, j in itertools.product(range(n), repeat=2):
            assert cmp(imgs[i], imgs[j]) == leq(i + 1, j + 1)


def test_enumerate_posets_counts():
    assert [len(od.enumerate_posets(n)) for n in range(1, 6)] == [1, 2, 5, 16, 63]


@given(st.integers(1, 5), st.data())
def test_separator_word(n, data):
    rel = data.draw(st.sampled_from(od.enumerate_posets(n)))
    S = data.draw(st.sets(st.integers(1, n)))
    W = od.separator_word((n, rel), S)
    up = od.upward_closure((n, rel), S)
    for k, img in enumerate(od.psi((n, rel)), 1):
        assert od.antichain_leq({W}, img) == (k in up)


def test_gap_examples():
    assert od.is_gap_B({"00", "01"}, {"0"})
    assert not od.is_gap_B({"000", "01"}, {"0"})
    assert od.antichain_lt({"000", "01"}, {"00", "01"}) and od.antichain_lt({"00", "01"}, {"0"})
    with pytest.raises(OrderError):
        od.is_gap_B({"0"}, {"0"})


def test_interval_examples():
    assert od.to_intervals({"0"}) == {(F(0), F(2, 9))}
    assert od.to_intervals({"0", "10"}) == {(F(0), F(2, 9)), (F(1, 3), F(1, 3) + F(2, 27))}
    assert od.to_intervals({"000", "100"}) == {(F(0), F(2, 81)), (F(1, 3), F(1, 3) + F(2, 81))}
    assert od.to_intervals({"0000"}) == {(F(0), F(2, 243))}


@given(antichains(), antichains())
def test_interval_and_hull_orders_agree(A, B):
    want = od.antichain_leq(A, B)
    I, J = od.to_intervals(A), od.to_intervals(B)
    assert od.interval_leq(I, J) == want
    assert od.convex_leq(od.to_convex(I), od.to_convex(J)) == want


def test_hull_examples():
    assert od.convex_leq(od.to_convex({(F(1, 4), F(1, 2))}), od.to_convex({(F(0), F(1))}))
    P = od.to_convex({(F(0), F(1, 9))})
    Q = od.to_convex({(F(1, 2), F(2, 3))})
    assert not od.convex_leq(P, Q) and not od.convex_leq(Q, P)
    assert od.convex_leq(P, P)


def test_tv_examples():
    assert od.word_to_vector("0") == (0, 1)
    assert od.word_to_vector("10") == (1, 0, 0, 1)
    assert od.tv_leq((1, 0, 1, 1, 1), (1, 0, 0, 1))
    assert not od.tv_leq((1, 0, 0, 1), (1, 0, 1, 1, 1))
    assert od.to_tv({"000", "100"}) == {(0, 1, 0, 1, 0, 1), (1, 0, 0, 1, 0, 1)}


@given(antichains(), antichains())
def test_tv_order_agrees(A, B):
    assert od.tvset_leq(od.to_tv(A), od.to_tv(B)) == od.antichain_leq(A, B)


def test_periodic_examples():
    assert od.to_periodic({"0"}) == PeriodicSet(2, "10")
    assert od.periodic_project(PeriodicSet(4, "0111"), 2) == PeriodicSet(2, "01")
    S = PeriodicSet(4, "0110")
    assert od.periodic_subset(S, S)
    with pytest.raises(OrderError):
        PeriodicSet(3, "010")


def test_plain_periodic_map_is_not_injective():
    assert od.to_periodic({"0"}) == od.to_periodic({"00", "01"}).minimized()


@given(antichains(), antichains())
def test_periodic_orders(A, B):
    want = od.antichain_leq(A, B)
    if want:
        assert od.periodic_subset(od.to_periodic(A), od.to_periodic(B))
    assert od.periodic_subset(od.to_periodic_faithful(A), od.to_periodic_faithful(B)) == want


def test_grammar_examples():
    assert od.to_grammar({"0"}) == "↓10↑"
    assert od.to_grammar({"0", "10"}) == "↓1↓10↑↑"
    assert od.to_grammar({"0000"}) == "↓↓↓↓10↑0↑0↑0↑"
    assert od.to_grammar({"000", "100"}) == "↓↓↓10↑0↑↓↓10↑0↑↑"


@given(antichains())
def test_grammar_round_trip(A):
    assert od.grammar_decode(od.to_grammar(A)) == A


def test_grammar_rewriting_matches_semantics():
    from finpres.suites import _grammar_by_rewriting

    small = od.all_antichains(1)
    for A, B in itertools.product(small, repeat=2):
        g, h = od.to_grammar(A), od.to_grammar(B)
        assert _grammar_by_rewriting(g, h) == od.antichain_leq(A, B), (A, B)


def test_all_antichains_counts():
    assert [len(od.all_antichains(k)) for k in range(3)] == [2, 5, 26]


def test_random_pairs_agree_everywhere():
    r = random.Random(5)
    for _ in range(200):
        A = od.min_antichain({"".join(r.choice("01") for _ in range(r.randint(0, 4))) for _ in range(r.randint(0, 3))})
        B = od.min_antichain({"".join(r.choice("01") for _ in range(r.randint(0, 4))) for _ in range(r.randint(0, 3))})
        want = od.antichain_leq(A, B)
        assert od.grammar_leq(od.to_grammar(A), od.to_grammar(B)) == want
