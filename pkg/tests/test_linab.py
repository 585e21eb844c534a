import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from retractive import corpus
from retractive.homalg import normalise_orders, simplicial_homology
from retractive.linab import (NatTrans, ab_cell, ab_boundary, ab_hom_group, adjunction_triangles, collapse_ab,
                              compose_nat, constant_ab, counit_CT, counit_homology_verdicts, group_ring_module,
                              homology_coefficients, homology_coefficients_map, identity_nat, is_identity_nat,
                              linearise, representability_report, space_object, square_collapse, square_pullback,
                              sum_over_W, tensor_ab, tensor_linearisation_iso, triangle_identities_CT, unit_CT,
                              underlying_presheaf, zero_object)
from retractive.retract import Base, cell, from_presheaf, hom_count, point_base, pullback, tensor
from retractive.sgrp import cyclic_group
from retractive.sset import standard_simplex


def test_torsion_tensor_vanishes():
    B = Base(standard_simplex(1), bound=3)
    T = tensor_ab(constant_ab(B, [2]), constant_ab(B, [3]))
    assert normalise_orders(T.orders(1, B.W.simplices(1)[0])) == []
    T = tensor_ab(constant_ab(B, [0, 4]), constant_ab(B, [6]))
    assert normalise_orders(T.orders(0, B.W.simplices(0)[0])) == [2, 6]
    assert T.check()


@pytest.mark.parametrize("seed", range(3))
def test_linearised_ranks_are_fibre_sizes_minus_one(seed):
    base, Y = corpus.random_instances(seed=seed, count=1, bound=3)[0]
    L = linearise(Y)
    assert L.check()
    for n, w in base.objects(3):
        assert L.rank(n, w) == len(Y.fibre(n, w)) - 1
        assert L.orders(n, w) == [0] * L.rank(n, w)


@settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.integers(0, 10_000), st.sampled_from([[2], [3], [2, 2]]))
def test_hom_group_order_matches_set_maps(seed, orders):
    """|Hom(Z̃Y, Z)| by linear algebra equals the number of maps ``Y -> UZ``."""
    base, Y = corpus.random_instances(seed=seed, count=1, bound=2)[0]
    Z = constant_ab(base, orders, 2)
    H = ab_hom_group(Y, Z)
    assert H.order == hom_count(Y, from_presheaf(underlying_presheaf(Z)))


def test_hom_group_over_group_ring():
    pt = point_base(cyclic_group(2), 3)
    Y = cell(pt, 0, pt.W.simplices(0)[0])
    # Z̃ of a free 0-cell represents evaluation: Hom = Z[G] as an abelian group
    assert ab_hom_group(Y, group_ring_module(pt)).invariants == [0, 0]


@pytest.mark.parametrize("n", [0, 1, 2])
def test_representability(n):
    B = Base(standard_simplex(2), cyclic_group(2), None, 3)
    for Z in (group_ring_module(B), constant_ab(B, [0, 3])):
        for w in B.W.simplices(n):
            assert representability_report(Z, n, w)


def test_representability_on_linearised_objects():
    for base, Y in corpus.random_instances(seed=7, count=3, bound=3):
        L = linearise(Y)
        for n, w in base.objects(2):
            assert representability_report(L, n, w)


def test_ab_cells():
    B = Base(standard_simplex(1), bound=3)
    w = B.W.simplices(1)[-1]
    C, D = ab_cell(B, 1, w), ab_boundary(B, 1, w)
    assert C.check() and D.check()
    # one operator [1] -> [1] carries w to each 1-simplex of Δ¹
    assert [C.rank(1, v) for v in B.W.simplices(1)] == [1, 1, 1]
    assert [C.rank(2, v) for v in B.W.simplices(2)] == [1, 1, 1, 1]
    assert all(D.rank(1, v) <= C.rank(1, v) for v in B.W.simplices(1))
    assert zero_object(B).check()


def test_triangle_identities_for_linearisation():
    for base, Y in corpus.random_instances(seed=3, count=3, bound=3):
        a, b = adjunction_triangles(Y, constant_ab(base, [2], 3))
        assert a and b


def test_natural_transformations():
    base, Y = corpus.random_instances(seed=2, count=1, bound=3)[0]
    L = linearise(Y)
    ident = identity_nat(L)
    assert ident.check(iso=True)
    assert is_identity_nat(compose_nat(ident, ident))
    doubling = NatTrans(L, L, lambda n, w: [[2 if i == j else 0 for j in range(L.rank(n, w))]
                                            for i in range(L.rank(n, w))])
    assert doubling.check()
    if any(L.rank(n, w) for n, w in base.objects(3)):
        assert not doubling.check(iso=True)


@pytest.mark.parametrize("K", [standard_simplex(1), corpus.circle()])
def test_linearisation_commutes_with_tensor(K):
    for _, Y in corpus.random_instances(seed=5, count=2, bound=3):
        assert tensor_linearisation_iso(tensor(Y, K), Y, K).check(iso=True)


def test_moore_homotopy_of_linearised_spaces():
    for name, want in [("S1", {1: [0], 2: []}), ("RP2", {1: [2], 2: []}), ("T2", {1: [0, 0], 2: [0]})]:
        X = corpus.named_spaces()[name]
        A = sum_over_W(linearise(corpus.pointed(X, "v", 4)))
        h = A.moore_homotopy(3)
        assert h == A.normalized_homology(3)
        assert {k: h[k] for k in (1, 2)} == want
        assert {k: h[k] for k in (1, 2)} == {k: simplicial_homology(X, 2)[k] for k in (1, 2)}


def test_homology_with_coefficients():
    Y = corpus.pointed(corpus.circle(), "v", 4)
    K = space_object(Y.base, corpus.circle(), 4)
    assert homology_coefficients(K, linearise(Y), 3) == {0: [], 1: [0], 2: [0], 3: []}
    K = space_object(Y.base, corpus.projective_plane(), 4)
    assert homology_coefficients(K, linearise(Y), 3) == {0: [], 1: [0], 2: [2], 3: []}
    L = linearise(Y)
    assert all(homology_coefficients_map(K, identity_nat(L), 3).values())
    with pytest.raises(ValueError):
        homology_coefficients(K, L, 4)


@pytest.mark.parametrize("bundle", [corpus.circle_double_cover(), corpus.eg_bundle_map(cyclic_group(2), 4)],
                         ids=["circle-cover", "EZ2"])
def test_diagram_squares(bundle):
    X = bundle.X
    BX = bundle.base_X(3)
    e = next(x for x in X.simplices(1) if not X.is_degenerate(x))
    Y = cell(BX, 1, e)
    assert square_pullback(Y, bundle).check(iso=True)
    assert square_collapse(pullback(Y, bundle)).check(iso=True)


def test_collapse_sums_fibres():
    pt = point_base(cyclic_group(2), 3)
    eg = corpus.eg_bundle_map(cyclic_group(2), 4)
    PB = eg.base_P(3)
    L = linearise(cell(PB, 0, PB.W.simplices(0)[0]))
    C = collapse_ab(L)
    assert C.check()
    star = pt.W.simplices(1)[0]
    assert C.rank(1, star) == sum(L.rank(1, p) for p in PB.W.simplices(1))


def test_ct_adjunction():
    Z2 = cyclic_group(2)
    eg = corpus.eg_bundle_map(Z2, 4)
    PB = eg.base_P(4)
    pt = point_base(Z2, 4)
    M = group_ring_module(pt)
    Y = linearise(cell(PB, 1, PB.W.simplices(1)[1]))
    assert triangle_identities_CT(Y, M) == (True, True)
    eta, C, TC = unit_CT(Y)
    assert eta.check()
    eps, T, CT = counit_CT(M, PB)
    assert eps.check()
    assert all(counit_homology_verdicts(M, PB, 3).values())
