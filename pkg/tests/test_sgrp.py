import itertools

import pytest
from hypothesis import given, settings, strategies as st

from retractive import corpus
from retractive.sgrp import (FiniteGroup, GroupAction, check_contraction, cyclic_group, eg_bundle,
                             fundamental_group, group_from_table, loop_group, product_group, reduce_word,
                             twisted_bundle, verify_twisting, word_inv, word_mul)

letters = st.tuples(st.sampled_from("abc"), st.sampled_from([1, -1]))
words = st.lists(letters, max_size=8).map(reduce_word)


@settings(max_examples=200, deadline=None)
@given(words, words, words)
def test_free_group_laws(u, v, w):
    assert word_mul(word_mul(u, v), w) == word_mul(u, word_mul(v, w))
    assert word_mul(u, word_inv(u)) == ()
    assert word_inv(word_inv(u)) == u
    assert reduce_word(u) == u
    assert word_inv(word_mul(u, v)) == word_mul(word_inv(v), word_inv(u))


def symmetric_group3() -> FiniteGroup:
    els = list(itertools.permutations(range(3)))
    return FiniteGroup(els, {(a, b): tuple(a[b[i]] for i in range(3)) for a in els for b in els}, (0, 1, 2),
                       name="S3")


def test_group_from_table_finds_unit():
    els = ["x", "y"]
    G = group_from_table(els, [["y", "x"], ["x", "y"]])
    assert G.identity == "y" and G.inv("x") == "x"
    with pytest.raises(ValueError):
        group_from_table(["x", "y"], [["x", "x"], ["x", "x"]])


@pytest.mark.parametrize("name,expected", [("S1", [0]), ("S1vS1", [0, 0]), ("RP2", [2]), ("T2", [0, 0]),
                                           ("S2", [])])
def test_abelianised_fundamental_group(name, expected):
    assert fundamental_group(corpus.named_spaces()[name]).abelianised() == expected


def test_homomorphism_counts_into_s3():
    S3 = symmetric_group3()
    els = S3.elements
    commuting = sum(1 for a in els for b in els if S3.mul(a, b) == S3.mul(b, a))
    involutions = sum(1 for a in els if S3.mul(a, a) == S3.identity)
    spaces = corpus.named_spaces()
    assert fundamental_group(spaces["T2"]).count_homomorphisms(S3) == commuting == 18
    assert fundamental_group(spaces["S1vS1"]).count_homomorphisms(S3) == 36
    assert fundamental_group(spaces["RP2"]).count_homomorphisms(S3) == involutions == 4
    assert fundamental_group(spaces["S2"]).count_homomorphisms(S3) == 1


def test_loop_group_of_circle_is_constant_z():
    G = loop_group(corpus.circle(), 3)
    assert G.check()
    assert [G.generator_count(n) for n in range(4)] == [1, 1, 1, 1]


@pytest.mark.parametrize("name", ["S1", "RP2", "T2", "S2"])
def test_loop_group_identities_and_twisting(name):
    G = loop_group(corpus.named_spaces()[name], 2)
    assert G.check()
    assert verify_twisting(G)


def test_loop_group_rejects_unreduced():
    with pytest.raises(ValueError):
        loop_group(corpus.circle_double_cover().P, 2)


@pytest.mark.parametrize("name", ["S1", "RP2"])
def test_twisted_bundle(name):
    X = corpus.named_spaces()[name]
    B = twisted_bundle(X, 2, 2)
    assert B.check()
    assert [B.orbit_count(n) for n in range(3)] == [len(X.simplices(n)) for n in range(3)]


@pytest.mark.parametrize("order", [2, 3])
def test_universal_bundle(order):
    H = cyclic_group(order)
    B = eg_bundle(H, 3)
    assert B.action.check(3) and B.action.is_free(3)
    assert check_contraction(B)
    for n in range(4):
        assert len(B.total.simplices(n)) == order ** (n + 1)
        assert len(B.action.orbits(n)) == len(B.base.simplices(n)) == order ** n
        for x in B.total.simplices(n):
            for g in H.elements:
                assert B.projection(B.action(x, g)) == B.projection(x)


def test_contraction_check_detects_breakage():
    B = eg_bundle(cyclic_group(2), 3)
    B.contraction = lambda x: (x[0],) + x
    assert not check_contraction(B)


def test_group_action_checks():
    cover = corpus.circle_double_cover()
    assert cover.action.check(3) and cover.action.is_free(3)
    X = cover.P
    bad = GroupAction(cyclic_group(2), X, lambda x, g: X.simplices(X.dim(x))[0] if g else x)
    assert not bad.check(2)


def test_product_group():
    G = product_group(cyclic_group(2), cyclic_group(3))
    assert len(G) == 6
    assert all(G.mul(a, b) == G.mul(b, a) for a in G.elements for b in G.elements)
