from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from retractive import corpus
from retractive.sset import (DeltaOperator, GeneratedSimplicialSet, NormalSimplex, boundary, chains_poset_count,
                             count_maps, horn, ns, product, pushout, quotient, standard_simplex, surjection_count,
                             validate, SimplicialMap)


@st.composite
def operators(draw, max_dim=4):
    m = draw(st.integers(0, max_dim))
    n = draw(st.integers(0, max_dim))
    vals = sorted(draw(st.lists(st.integers(0, n), min_size=m + 1, max_size=m + 1)))
    return DeltaOperator(tuple(vals), n)


@settings(max_examples=200, deadline=None)
@given(operators())
def test_factorisation_and_word_roundtrip(a):
    mono, epi = a.factor()
    assert mono.is_injective() and epi.is_surjective()
    assert mono @ epi == a
    cofaces, codegens = a.word()
    assert DeltaOperator.from_word(cofaces, codegens, a.domain) == a


@settings(max_examples=100, deadline=None)
@given(operators(), st.data())
def test_composition_is_associative(a, data):
    b_vals = sorted(data.draw(st.lists(st.integers(0, a.domain), min_size=1, max_size=4)))
    b = DeltaOperator(tuple(b_vals), a.domain)
    c_vals = sorted(data.draw(st.lists(st.integers(0, b.domain), min_size=1, max_size=4)))
    c = DeltaOperator(tuple(c_vals), b.domain)
    assert (a @ b) @ c == a @ (b @ c)


@pytest.mark.parametrize("n", range(2, 6))
def test_cosimplicial_identities(n):
    d, s = DeltaOperator.coface, DeltaOperator.codegeneracy
    for j in range(n + 1):
        for i in range(j):
            assert d(n + 1, j) @ d(n, i) == d(n + 1, i) @ d(n, j - 1)
    for j in range(n):
        for i in range(n + 1):
            lhs = s(n - 1, j) @ d(n, i)
            if i < j:
                assert lhs == d(n - 1, i) @ s(n - 2, j - 1)
            elif i in (j, j + 1):
                assert lhs == DeltaOperator.identity(n - 1)
            else:
                assert lhs == d(n - 1, i - 1) @ s(n - 2, j)


@pytest.mark.parametrize("m,n", [(0, 0), (1, 2), (2, 3), (3, 2), (2, 4)])
def test_monotone_map_count(m, n):
    assert len(DeltaOperator.all(m, n)) == comb(m + n + 1, m + 1)
    # independent route: simplicial maps Δᵐ -> Δⁿ
    assert count_maps(standard_simplex(m), standard_simplex(n), limit=10**12) == comb(m + n + 1, m + 1)


def test_surjection_count():
    for n in range(6):
        for m in range(n + 1):
            assert surjection_count(n, m) == sum(1 for a in DeltaOperator.all(n, m) if a.is_surjective())


def test_eilenberg_zilber_uniqueness():
    X = corpus.torus()
    for n in range(5):
        simplices = X.simplices(n)
        assert len(set(simplices)) == len(simplices)
        for x in simplices:
            word, z = X.decompose(x)
            assert not X.is_degenerate(z)
            y = z
            for j in reversed(word):
                y = X.degeneracy(j, y)
            assert y == x


def test_normal_simplex_shorthand():
    assert ns("v", 0, 0, 1) == NormalSimplex((1, 0), "v", 0)
    assert ns("v", 0, 0, 1).degree == 2


@pytest.mark.parametrize("name", ["S1", "S1vS1", "RP2", "T2", "S2"])
def test_corpus_spaces_validate(name):
    assert validate(corpus.named_spaces()[name], 4)


@pytest.mark.parametrize("n", range(4))
def test_standard_shapes(n):
    assert validate(standard_simplex(n), n + 1)
    assert [len(standard_simplex(n).nondegenerate(k)) for k in range(n + 1)] == [comb(n + 1, k + 1)
                                                                                   for k in range(n + 1)]
    if n:
        assert len(boundary(n).nondegenerate(n)) == 0
        assert len(horn(n, 0).nondegenerate(n - 1)) == n


def test_simplex_counts_of_circle():
    S1 = corpus.circle()
    # S1_n has n + 1 simplices: the degenerate vertex and n degeneracies of e
    assert [len(S1.simplices(n)) for n in range(5)] == [1, 2, 3, 4, 5]


def test_product_of_intervals():
    P = product(standard_simplex(1), standard_simplex(1), 3)
    assert [len(P.nondegenerate(n)) for n in range(4)] == [4, 5, 2, 0]
    assert [chains_poset_count(1, 1, k) for k in range(4)] == [4, 5, 2, 0]
    assert validate(P, 3)


def test_broken_face_is_rejected():
    v = ns("v", 0)
    bad = GeneratedSimplicialSet({"v": 0, "w": 0, "e": 1, "t": 2},
                                 {"e": (v, ns("w", 0)), "t": (ns("e", 1), ns("e", 1), ns("v", 0, 0))})
    rep = bad.validate_generators()
    assert not rep and rep.violation


def test_tampered_cover_fails():
    good = corpus.sphere_double_cover()
    assert good.check(3) and validate(good.P, 3)
    bad = corpus.sphere_double_cover(tamper=True)
    rep = bad.P.validate_generators()
    assert not rep and "t1" in rep.violation


def test_quotient_and_pushout():
    D = standard_simplex(1)
    C, _ = quotient(D, [(ns((0,), 0), ns((1,), 0))], 3)
    assert [len(C.nondegenerate(n)) for n in range(3)] == [1, 1, 0]
    pt = standard_simplex(0)
    ends = SimplicialMap(pt, D, lambda x: NormalSimplex(x.degeneracies, (0,), 0))
    other = SimplicialMap(pt, D, lambda x: NormalSimplex(x.degeneracies, (1,), 0))
    P = pushout(ends, other, 3)
    assert [len(P.space.nondegenerate(n)) for n in range(2)] == [3, 2]
