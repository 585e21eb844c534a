import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import betti_numbers, invariant_factors as oracle_factors
from retractive import corpus
from retractive.homalg import (ChainComplex, Lattice, Subquotient, constant_group, determinant, invariant_factors,
                               matmul, normalise_orders, reduce_presentation,
                               simplicial_homology, smith_form, tensor_orders)
from retractive.fincat import nerve, one_object_category
from retractive.sgrp import cyclic_group
from retractive.sset import boundary, standard_simplex

matrices = st.integers(1, 5).flatmap(lambda m: st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-30, 30), min_size=n, max_size=n), min_size=m, max_size=m)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_smith_form_reconstructs_and_is_unimodular(A):
    m, n = len(A), len(A[0])
    sf = smith_form(A)
    assert matmul(matmul(sf.U, sf.D, inner=m, cols=n), sf.V, inner=n, cols=n) == A
    assert matmul(matmul(sf.L, A, inner=m, cols=n), sf.R, inner=n, cols=n) == sf.D
    assert abs(determinant(sf.U)) == 1 and abs(determinant(sf.V)) == 1
    diag = sf.diagonal
    assert all(d > 0 for d in diag)
    assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))


@settings(max_examples=80, deadline=None)
@given(st.integers(1, 4).flatmap(lambda m: st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-12, 12), min_size=n, max_size=n), min_size=m, max_size=m))))
def test_invariant_factors_match_determinantal_divisors(A):
    assert invariant_factors(A) == oracle_factors(A)


def test_known_smith_forms():
    assert invariant_factors([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]) == [2, 6, 12]
    assert invariant_factors([[0, 0], [0, 0]]) == []
    assert invariant_factors([[6]]) == [6]
    assert invariant_factors([[2, 4], [6, 8]]) == [2, 4]
    assert invariant_factors([[1, 0], [0, 0]]) == [1]
    assert smith_form([[2]]).D == [[2]]


def test_nonzero_square_of_boundary_is_an_error():
    with pytest.raises(ValueError):
        ChainComplex([1, 1, 1], {1: [[1]], 2: [[1]]}).homology()


def test_homology_of_small_complexes():
    S1 = corpus.circle()
    assert simplicial_homology(S1, 2) == {0: [0], 1: [0], 2: []}
    assert simplicial_homology(corpus.torus(), 2) == {0: [0], 1: [0, 0], 2: [0]}
    assert simplicial_homology(corpus.projective_plane(), 2) == {0: [0], 1: [2], 2: []}
    assert simplicial_homology(corpus.sphere2(), 3) == {0: [0], 1: [], 2: [0], 3: []}
    assert simplicial_homology(standard_simplex(3), 2) == {0: [0], 1: [], 2: []}
    assert simplicial_homology(boundary(3), 2) == {0: [0], 1: [], 2: [0]}


def test_classifying_space_of_z2():
    B = nerve(one_object_category(cyclic_group(2)), 3)
    assert simplicial_homology(B, 3) == {0: [0], 1: [2], 2: [], 3: [2]}


@pytest.mark.parametrize("name", ["S1", "S1vS1", "RP2", "T2", "S2"])
def test_free_ranks_match_rational_oracle(name):
    X = corpus.named_spaces()[name]
    h = simplicial_homology(X, 2)
    assert [v.count(0) for v in h.values()] == betti_numbers(X, 2)


def test_zero_complex():
    assert ChainComplex([0, 0, 0]).homology() == {0: [], 1: []}


def test_homology_ignores_basis_order():
    rng = random.Random(3)
    X = corpus.torus()
    ranks = [1, 3, 2, 0]
    d1 = [[0, 0, 0]]
    # torus: d(s) = b - c + a, d(t) = a - c + b
    d2 = [[1, 1], [1, 1], [-1, -1]]
    base = ChainComplex(ranks, {1: d1, 2: d2, 3: [[], []]}).homology(2)
    for _ in range(5):
        p1 = list(range(3))
        p2 = list(range(2))
        rng.shuffle(p1)
        rng.shuffle(p2)
        e1 = [[d1[0][p1[c]] for c in range(3)]]
        e2 = [[d2[p1[r]][p2[c]] for c in range(2)] for r in range(3)]
        assert ChainComplex(ranks, {1: e1, 2: e2, 3: [[], []]}).homology(2) == base
    assert base == simplicial_homology(X, 2)


def test_lattice_preimage_and_subquotient():
    L = Lattice.full(2)
    K = L.preimage([[2, 0]], Lattice.diagonal([4]))
    assert [1, 0] not in K and [2, 0] in K and [0, 1] in K
    sq = Subquotient.of(Lattice.full(2), Lattice([[2, 0], [0, 3]], 2))
    assert sq.invariants == [6]


def test_reduce_presentation():
    p = reduce_presentation(2, [[2, 0], [0, 3]])
    assert normalise_orders(p.orders) == [6]
    p = reduce_presentation(3, [[1, 1, 0]])
    assert normalise_orders(p.orders) == [0, 0]


def test_tensor_orders():
    assert normalise_orders(tensor_orders([2], [3])) == []
    assert normalise_orders(tensor_orders([0, 4], [6])) == [2, 6]


def test_constant_group_moore_homotopy():
    A = constant_group([0], 3)
    assert A.moore_homotopy(2) == {0: [0], 1: [], 2: []}
    assert A.normalized_homology(2) == A.moore_homotopy(2)
