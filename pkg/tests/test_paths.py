import dataclasses

import pytest
from hypothesis import given, strategies as st

from finpres import paths as pa, relcore
from finpres.orders import PeriodicSet
from finpres.paths import SHIPPED_KIT as K, PathError
from finpres.suites import brute_path_hom

oriented = st.text(alphabet="<>", max_size=7)


def test_basic_operations():
    assert pa.reverse(">>") == "<<"
    assert pa.algebraic_length(pa.reverse("><>")) == -pa.algebraic_length("><>")
    assert pa.algebraic_length(pa.concat(">>", "<")) == 1
    assert pa.levels(">>>") == [0, 1, 2, 3]
    with pytest.raises(PathError):
        pa.check_path("x")


@given(oriented, oriented)
def test_dp_matches_brute_force(p, q):
    assert pa.path_hom_exists(p, q) == brute_path_hom(p, q)


@given(oriented, oriented)
def test_dp_matches_structure_search(p, q):
    want = relcore.hom_exists(pa.path_structure(p), pa.path_structure(q))
    assert pa.path_hom_exists(p, q) == want


@given(oriented, oriented)
def test_witness_is_homomorphism(p, q):
    f = pa.path_hom_witness(p, q)
    assert (f is not None) == pa.path_hom_exists(p, q)
    if f is not None:
        assert pa.is_path_hom(p, q, f)


@given(oriented, oriented)
def test_plank_homs_fix_the_root(p, q):
    f = pa.path_hom_witness(p, q, start=0)
    assert (f is not None) == pa.plank_hom_exists(p, q)
    if f is not None:
        assert f[0] == 0 and pa.is_path_hom(p, q, f)


def test_dp_examples():
    assert pa.path_hom_exists(">><", ">><")
    assert pa.path_hom_exists(">>", ">")  is False
    assert pa.path_hom_exists("><", ">")
    assert not pa.path_hom_exists(K.B1, K.B0)
    assert pa.count_rooted_homs(K.B0, K.B1, 0, len(K.B1)) == 1


def test_shipped_kit_passes():
    report = pa.block_property_suite(K)
    assert all(report.values()), [k for k, v in report.items() if not v]
    assert pa.make_blocks() == K


def test_broken_kits_fail():
    same = dataclasses.replace(K, B1=K.B0)
    assert not all(pa.block_property_suite(same).values())
    tilted = dataclasses.replace(K, S=K.S + ">")
    assert not pa.block_property_suite(tilted)["balanced S"]


def test_word_images():
    assert pa.p_of_word("0") == K.B0
    R = pa.reverse
    assert pa.p_of_word("0110") == K.B0 + K.S + R(K.B1) + K.S + K.B0 + R(K.S) + R(K.B1)
    W = "01"
    assert len(pa.pbar(W)) == len(K.H) + len(pa.p_of_word(W)) + len(K.T)
    with pytest.raises(PathError):
        pa.p_of_word("011")


def test_periodic_images():
    full = pa.embed_periodic_to_path(PeriodicSet(1, "1"))
    one = pa.pbar("1")
    assert full == K.H + one + pa.reverse(one)
    evens = PeriodicSet(2, "01")
    assert pa.embed_periodic_to_path(evens).startswith(K.H + pa.pbar("0"))


def test_pbar_order_examples():
    assert pa.path_hom_exists(pa.pbar("10"), pa.pbar("1"))
    assert not pa.path_hom_exists(pa.pbar("1"), pa.pbar("10"))
